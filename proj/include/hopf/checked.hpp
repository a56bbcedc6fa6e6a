#pragma once

/**
 * @file checked.hpp
 * @brief Overflow-checked signed 64-bit arithmetic.
 *
 * Every exact count and every polynomial coefficient in the library goes
 * through these helpers, so an overflow throws instead of wrapping.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopf {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition: " + std::to_string(a) + " + " +
                                  std::to_string(b));
    }
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction: " + std::to_string(a) + " - " +
                                  std::to_string(b));
    }
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication: " + std::to_string(a) + " * " +
                                  std::to_string(b));
    }
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_pow(Int base, unsigned exp) {
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace hopf
