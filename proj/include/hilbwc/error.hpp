#pragma once

#include <stdexcept>
#include <string>

namespace hilbwc {

/// Base class of every error raised by the library. Precondition violations,
/// division by zero, variable mismatches and exponent overflow all land here.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the localization sum over fixed points does not become regular
/// after the diagonal specialization; this always indicates a weight-convention bug.
class regularity_error : public error {
public:
    using error::error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw error(what); }

inline int checked_add(int a, int b)
{
    int r = 0;
    if (__builtin_add_overflow(a, b, &r))
        fail("exponent overflow");
    return r;
}

inline int checked_mul(int a, int b)
{
    int r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        fail("exponent overflow");
    return r;
}

} // namespace detail
} // namespace hilbwc
