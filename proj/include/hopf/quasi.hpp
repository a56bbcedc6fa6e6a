#pragma once

// Floor expressions in the twist parameter n that make the formulas quasi-polynomial.

#include <stdexcept>
#include <string>

#include "hopf/checked.hpp"

namespace hopf {

inline void require_twist(Int n) {
    if (n < 1) throw std::invalid_argument("twist parameter n must be >= 1, got " + std::to_string(n));
}

inline Int half_floor(Int n) { return n / 2; }              // ⌊n/2⌋
inline Int half_floor_pred(Int n) { return (n - 1) / 2; }   // ⌊(n−1)/2⌋, n >= 1
inline Int sq_half_floor(Int n) { return checked_mul(n, n) / 2; }           // ⌊n²/2⌋
inline Int sq_half_floor_pred(Int n) { return (checked_mul(n, n) - 1) / 2; }  // ⌊(n²−1)/2⌋, n >= 1

}  // namespace hopf
