#pragma once

// Overflow-checked int64 arithmetic. Every operation either returns the exact
// result or throws CapacityError; nothing wraps.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antdoes {

class CapacityError : public std::overflow_error {
public:
    explicit CapacityError(const std::string& what)
        : std::overflow_error("arithmetic capacity exceeded: " + what) {}
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw CapacityError("addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw CapacityError("subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CapacityError("multiplication");
    return r;
}

inline std::int64_t abs(std::int64_t a) {
    if (a == INT64_MIN)
        throw CapacityError("absolute value");
    return a < 0 ? -a : a;
}

inline std::int64_t pow(std::int64_t base, std::int64_t exponent) {
    std::int64_t result = 1;
    while (exponent > 0) {
        if (exponent & 1)
            result = mul(result, base);
        exponent >>= 1;
        if (exponent > 0)
            base = mul(base, base);
    }
    return result;
}

/// Compares base^exponent against limit without overflowing; returns -1, 0 or 1.
/// Requires base >= 1 and exponent >= 1.
inline int compare_pow(std::int64_t base, std::int64_t exponent, std::int64_t limit) {
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
        std::int64_t next;
        if (__builtin_mul_overflow(acc, base, &next) || next > limit)
            return 1;
        acc = next;
        if (base == 1)
            break;
    }
    return acc == limit ? 0 : -1;
}

} // namespace checked
} // namespace antdoes
