// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace depthlab {

/// Base class for all depthlab errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Query point or dataset dimensions do not match the operation's requirement.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Input exceeds a combinatorial guard (e.g. exact depth for large n or d).
struct SizeLimitError : Error {
    using Error::Error;
};

struct EmptyInputError : Error {
    using Error::Error;
};

/// A numeric argument is outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};

/// Fewer observations than the statistical procedure requires.
struct InsufficientDataError : Error {
    using Error::Error;
};

/// Malformed text input; message carries the 1-based line number.
struct ParseError : Error {
    using Error::Error;
};

/// A token parsed but is not an acceptable value (NaN, infinity).
struct ValueError : Error {
    using Error::Error;
};

/// Bad study configuration (unknown key, unknown distribution id, ...).
struct ConfigError : Error {
    using Error::Error;
};

struct GridSpecError : Error {
    using Error::Error;
};

}  // namespace depthlab
