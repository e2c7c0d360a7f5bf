// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace depthlab {

/// Process-wide cap on worker threads; 0 means hardware concurrency.
/// Results never depend on this value: parallel loops write to disjoint
/// slots and reductions run in index order afterwards.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs body(i) for i in [begin, end) across worker threads in static chunks.
/// body must only write to state owned by index i.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace depthlab
