// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/dataset.hpp"

namespace depthlab {

inline constexpr const char* kVersion = "0.1.0";

/// Reads a dataset: one observation per line, comma-separated decimal floats,
/// no header. Ragged rows raise ParseError with the line number, non-finite
/// tokens raise ValueError, an empty file raises EmptyInputError.
Dataset read_dataset(const std::string& path);

/// Writes in the same format at 17 significant digits (value round-trip).
void write_dataset(const std::string& path, const Dataset& data);

/// Shortest-exact formatting used in every CSV we emit.
std::string format_double(double v);

/// Buffered CSV emitter. Every file starts with the provenance comment
///   # depthlab <version> seed=<seed> cmd=<canonical invocation>
class CsvWriter {
  public:
    CsvWriter(std::string path, const std::string& canonical_cmd,
              std::optional<std::uint64_t> seed);

    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& fields);
    void field_double(std::vector<std::string>& fields, double v) {
        fields.push_back(format_double(v));
    }

    /// Flushes to disk; throws on I/O failure.
    void close();
    ~CsvWriter();

  private:
    std::string path_;
    std::string buffer_;
    bool closed_ = false;
};

}  // namespace depthlab
