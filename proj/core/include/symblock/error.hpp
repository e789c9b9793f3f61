#pragma once

#include <stdexcept>
#include <string>

namespace symblock {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or mismatched arguments (sizes, shapes, parameter ranges).
struct ShapeError : Error {
    using Error::Error;
};

/// A partition passed as a p-core is not its own p-core.
struct InvalidCoreError : Error {
    using Error::Error;
};

/// Requested projection of a cyclotomic element that is not rational.
struct NonRationalError : Error {
    using Error::Error;
};

/// X^t * conj(X) failed to be the expected diagonal.
struct OrthogonalityError : Error {
    using Error::Error;
};

/// A mathematically guaranteed identity failed at runtime. Always a bug
/// (or bad cached data) somewhere; never ignored.
struct ConsistencyError : Error {
    using Error::Error;
};

/// Parameters outside the regime an algorithm is valid for.
struct UnsupportedRegimeError : Error {
    using Error::Error;
};

/// A configured cap (oracle degree, enumeration size, ...) was exceeded.
struct CapExceededError : Error {
    using Error::Error;
};

/// Cache file missing fields, bad magic, wrong version or corrupt payload.
/// Callers recover by recomputing.
struct CacheInvalidError : Error {
    using Error::Error;
};

/// Filesystem-level failure writing or reading reports/caches.
struct IoError : Error {
    using Error::Error;
};

/// Bad command line / method combination.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace symblock
