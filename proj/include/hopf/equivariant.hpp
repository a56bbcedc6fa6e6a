#pragma once

/**
 * @file equivariant.hpp
 * @brief S2-equivariant E-polynomials as elements aT + bN of R(S2)[q].
 *
 * T is the trivial and N the sign representation. For a variety X with an
 * involution, a + b is the E-polynomial of X, a is that of X/S2, and a - b is
 * what a Frobenius count twisted by the involution sees.
 */

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hopf/motive_poly.hpp"
#include "hopf/quasi.hpp"

namespace hopf {

struct EquivProjections {
    MotivePoly plain;     ///< t + n
    MotivePoly quotient;  ///< t
    MotivePoly twisted;   ///< t - n
};

struct EquivPoly {
    MotivePoly t_part;  ///< coefficient of T
    MotivePoly n_part;  ///< coefficient of N

    static EquivPoly trivial(MotivePoly a) { return {std::move(a), {}}; }
    static EquivPoly sign(MotivePoly b) { return {{}, std::move(b)}; }
    static EquivPoly one() { return trivial(1); }

    friend bool operator==(const EquivPoly&, const EquivPoly&) = default;

    friend EquivPoly operator+(const EquivPoly& x, const EquivPoly& y) {
        return {x.t_part + y.t_part, x.n_part + y.n_part};
    }
    friend EquivPoly operator-(const EquivPoly& x, const EquivPoly& y) {
        return {x.t_part - y.t_part, x.n_part - y.n_part};
    }
    friend EquivPoly operator-(const EquivPoly& x) { return {-x.t_part, -x.n_part}; }

    // (aT + bN)(cT + dN) = (ac + bd)T + (ad + bc)N, using N² = T.
    friend EquivPoly operator*(const EquivPoly& x, const EquivPoly& y) {
        return {x.t_part * y.t_part + x.n_part * y.n_part, x.t_part * y.n_part + x.n_part * y.t_part};
    }
    friend EquivPoly operator*(const MotivePoly& s, const EquivPoly& x) {
        return {s * x.t_part, s * x.n_part};
    }

    EquivPoly& operator+=(const EquivPoly& o) { return *this = *this + o; }
    EquivPoly& operator*=(const EquivPoly& o) { return *this = *this * o; }

    MotivePoly plain() const { return t_part + n_part; }
    MotivePoly quotient() const { return t_part; }
    MotivePoly twisted() const { return t_part - n_part; }
    EquivProjections project() const { return {plain(), quotient(), twisted()}; }

    /// "(<t>)T + (<n>)N"
    std::string to_string() const { return "(" + t_part.to_string() + ")T + (" + n_part.to_string() + ")N"; }
};

enum class EquivKey {
    E_sigma1,           ///< eigenvalue pairs with λ1 ≠ λ2, swap
    E_sigma1_sigma0,    ///< λ1 ≠ λ2, λ1ⁿ = λ2ⁿ
    E_sigma1_sigma1,    ///< λ1 ≠ λ2, λ1ⁿ ≠ λ2ⁿ
    pgl2_mod_diag,      ///< PGL2/D with the row swap
    gl2_inner,          ///< GL2 with an inner involution
    torus2_swap,        ///< (C*)² with the coordinate swap
    torus_trivial,      ///< C* with trivial action
    U_space,            ///< {(a,d,k) : k ≠ 0, ad ≠ k} with (a,d,k) ↦ (d,a,k)
    mu_pairs_free,      ///< (μn*)² − μn* with the free involution (λ,ε) ↦ (ελ,ε⁻¹)
    punctured_mu,       ///< (C* − μn) × μn* with (λ,ε) ↦ (ελ,ε⁻¹)
    E_minus_mu_blocks,  ///< λ1 ≠ λ2, λ1ⁿ ≠ λ2ⁿ, neither eigenvalue in μn
};

inline constexpr std::array kAllEquivKeys = {
    EquivKey::E_sigma1,      EquivKey::E_sigma1_sigma0, EquivKey::E_sigma1_sigma1, EquivKey::pgl2_mod_diag,
    EquivKey::gl2_inner,     EquivKey::torus2_swap,     EquivKey::torus_trivial,   EquivKey::U_space,
    EquivKey::mu_pairs_free, EquivKey::punctured_mu,    EquivKey::E_minus_mu_blocks,
};

inline std::string_view equiv_key_name(EquivKey k) {
    switch (k) {
        case EquivKey::E_sigma1: return "E_sigma1";
        case EquivKey::E_sigma1_sigma0: return "E_sigma1_sigma0";
        case EquivKey::E_sigma1_sigma1: return "E_sigma1_sigma1";
        case EquivKey::pgl2_mod_diag: return "pgl2_mod_diag";
        case EquivKey::gl2_inner: return "gl2_inner";
        case EquivKey::torus2_swap: return "torus2_swap";
        case EquivKey::torus_trivial: return "torus_trivial";
        case EquivKey::U_space: return "U_space";
        case EquivKey::mu_pairs_free: return "mu_pairs_free";
        case EquivKey::punctured_mu: return "punctured_mu";
        case EquivKey::E_minus_mu_blocks: return "E_minus_mu_blocks";
    }
    throw std::logic_error("unhandled EquivKey");
}

inline EquivKey parse_equiv_key(std::string_view name) {
    for (auto k : kAllEquivKeys) {
        if (equiv_key_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown equivariant catalog key: " + std::string(name));
}

/// Equivariant E-polynomial of a cataloged space at twist n (n-independent keys ignore n).
inline EquivPoly equiv_catalog(EquivKey key, Int n) {
    require_twist(n);
    const auto q = MotivePoly::q();
    const Int h = half_floor(n);
    const Int h1 = half_floor_pred(n);
    switch (key) {
        case EquivKey::E_sigma1:
            return {(q - 1).pow(2), -(q - 1)};
        case EquivKey::E_sigma1_sigma0:
            return {h * (q - 1), h1 * (q - 1)};
        case EquivKey::E_sigma1_sigma1:
            return {(q - 1) * (q - h - 1), -((n - h) * (q - 1))};
        case EquivKey::pgl2_mod_diag:
            return {q * q, q};
        case EquivKey::gl2_inner:
            return EquivPoly::trivial(motives::gl2());
        case EquivKey::torus2_swap:
            return {q * q - q, -(q - 1)};
        case EquivKey::torus_trivial:
            return EquivPoly::trivial(q - 1);
        case EquivKey::U_space:
            return {q * (q - 1).pow(2), q - 1};
        case EquivKey::mu_pairs_free: {
            const Int orbits = (n - 1) * (n - 2) / 2;
            return {orbits, orbits};
        }
        case EquivKey::punctured_mu:
            return {h * q - sq_half_floor(n), h1 * q - sq_half_floor_pred(n)};
        case EquivKey::E_minus_mu_blocks:
            return {q * q - (n + h + 2) * q + (n * n + n + h + 1), -((2 * n - h) * q - n * n - 2 * n + h)};
    }
    throw std::logic_error("unhandled EquivKey");
}

inline EquivPoly equiv_catalog(std::string_view name, Int n) { return equiv_catalog(parse_equiv_key(name), n); }

}  // namespace hopf
