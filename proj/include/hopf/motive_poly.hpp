#pragma once

/**
 * @file motive_poly.hpp
 * @brief Exact arithmetic in Z[q], the subring of the Grothendieck ring generated
 *        by the Lefschetz motive q = [C].
 *
 * MotivePoly is a dense coefficient vector, index i holding the coefficient of q^i.
 * The canonical form has a nonzero leading entry; the zero polynomial is the empty
 * vector. Coefficient overflow throws std::overflow_error.
 *
 * @code{.cpp}
 * using namespace hopf;
 * const auto q = MotivePoly::q();
 * auto gl2 = (q * q - 1) * (q * q - q);    // q^4 - q^3 - q^2 + q
 * Int order = gl2.eval(3);                  // 48
 * @endcode
 */

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/checked.hpp"

namespace hopf {

class MotivePoly {
public:
    MotivePoly() = default;

    /// Coefficients in ascending degree; trailing zeros are stripped.
    explicit MotivePoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    MotivePoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

    // Implicit from an integer so that expressions like `q - 1` read naturally.
    MotivePoly(Int c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.push_back(c);
    }
    MotivePoly(int c) : MotivePoly(static_cast<Int>(c)) {}  // NOLINT(google-explicit-constructor)

    static MotivePoly q() { return MotivePoly{0, 1}; }

    static MotivePoly monomial(Int c, std::size_t k) {
        if (c == 0) return {};
        std::vector<Int> v(k + 1, 0);
        v[k] = c;
        return MotivePoly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Int leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    std::span<const Int> coeffs() const { return coeffs_; }

    friend bool operator==(const MotivePoly&, const MotivePoly&) = default;

    friend MotivePoly operator+(const MotivePoly& a, const MotivePoly& b) {
        std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.coeff(i), b.coeff(i));
        return MotivePoly(std::move(r));
    }

    friend MotivePoly operator-(const MotivePoly& a, const MotivePoly& b) {
        std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(a.coeff(i), b.coeff(i));
        return MotivePoly(std::move(r));
    }

    friend MotivePoly operator-(const MotivePoly& a) { return MotivePoly{} - a; }

    friend MotivePoly operator*(const MotivePoly& a, const MotivePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r[i + j] = checked_add(r[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        return MotivePoly(std::move(r));
    }

    MotivePoly& operator+=(const MotivePoly& o) { return *this = *this + o; }
    MotivePoly& operator-=(const MotivePoly& o) { return *this = *this - o; }
    MotivePoly& operator*=(const MotivePoly& o) { return *this = *this * o; }

    MotivePoly pow(unsigned k) const {
        MotivePoly r(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// Horner evaluation at an integer; exact or throws.
    Int eval(Int x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = checked_add(checked_mul(acc, x), *it);
        }
        return acc;
    }

    /// Canonical rendering, descending degree: "3*q^3 - 5*q^2 + 2*q". Unit
    /// coefficients are omitted on non-constant terms; zero renders as "0".
    std::string to_string() const { return render(" + ", " - ", "*"); }

    /// Compact rendering used inside factored forms: "3q^3-5q^2+2q".
    std::string to_compact() const { return render("+", "-", ""); }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::string render(std::string_view plus, std::string_view minus, std::string_view times) const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Int c = coeffs_[k];
            if (c == 0) continue;
            // |INT64_MIN| is not representable; render through unsigned.
            const unsigned long long mag =
                c < 0 ? 0ULL - static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
            if (first) {
                if (c < 0) out += '-';
            } else {
                out += c < 0 ? minus : plus;
            }
            first = false;
            if (k == 0) {
                out += std::to_string(mag);
                continue;
            }
            if (mag != 1) {
                out += std::to_string(mag);
                out += times;
            }
            out += 'q';
            if (k > 1) {
                out += '^';
                out += std::to_string(k);
            }
        }
        return out;
    }

    std::vector<Int> coeffs_;
};

inline MotivePoly operator*(Int c, const MotivePoly& a) { return MotivePoly(c) * a; }

namespace motives {

inline MotivePoly affine(unsigned k) { return MotivePoly::monomial(1, k); }
inline MotivePoly torus() { return MotivePoly::q() - 1; }
inline MotivePoly gl2() {
    const auto q = MotivePoly::q();
    return (q * q - 1) * (q * q - q);
}
inline MotivePoly sl2() {
    const auto q = MotivePoly::q();
    return q * q * q - q;
}
inline MotivePoly pgl2() { return sl2(); }
/// PGL2 modulo its diagonal torus: ordered pairs of distinct points of P^1.
inline MotivePoly pgl2_mod_diag() {
    const auto q = MotivePoly::q();
    return q * q + q;
}
/// PGL2 modulo the unipotent stabilizer of a Jordan block.
inline MotivePoly pgl2_mod_unipotent() {
    const auto q = MotivePoly::q();
    return q * q - 1;
}
/// Stabilizer in PGL2 of a Jordan block J_lambda, isomorphic to the affine line.
inline MotivePoly jordan_stab_proj() { return MotivePoly::q(); }
/// Invertible 2x2 matrices having 1 as an eigenvalue.
inline MotivePoly omega() {
    const auto q = MotivePoly::q();
    return q * q * q - 2 * q;
}

}  // namespace motives

/**
 * Looks up a building-block motive by key. Keys: "affine(k)", "torus", "gl2", "sl2",
 * "pgl2", "pgl2_mod_diag", "pgl2_mod_unipotent", "jordan_stab_proj", "omega".
 * Throws std::invalid_argument on an unknown key.
 */
inline MotivePoly catalog_motive(std::string_view key) {
    if (key.starts_with("affine(") && key.ends_with(")")) {
        const auto digits = key.substr(7, key.size() - 8);
        unsigned k = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw std::invalid_argument("bad affine dimension in catalog key: " + std::string(key));
        }
        return motives::affine(k);
    }
    if (key == "torus") return motives::torus();
    if (key == "gl2") return motives::gl2();
    if (key == "sl2") return motives::sl2();
    if (key == "pgl2") return motives::pgl2();
    if (key == "pgl2_mod_diag") return motives::pgl2_mod_diag();
    if (key == "pgl2_mod_unipotent") return motives::pgl2_mod_unipotent();
    if (key == "jordan_stab_proj") return motives::jordan_stab_proj();
    if (key == "omega") return motives::omega();
    throw std::invalid_argument("unknown motive catalog key: " + std::string(key));
}

}  // namespace hopf
