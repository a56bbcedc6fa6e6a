#pragma once

/**
 * @file finite_field.hpp
 * @brief F_p, F_{p²} = F_p[x]/(x² − d), 2×2 matrices over either, and the matrix
 *        invariants the point-counting oracle needs: Jordan-stratum classification,
 *        the geometric sum Φ_n, the rank of the fibre map T, and common eigenlines.
 *
 * Fields carry the modulus; elements are small value types. Matrix helpers are
 * templates over the field so the same code runs over F_p and F_{p²}.
 */

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/checked.hpp"
#include "hopf/jordan_types.hpp"

namespace hopf {

struct Residue {
    std::uint32_t v = 0;
    friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// a + b·√d in F_{p²}.
struct QuadElem {
    Residue re;
    Residue im;
    friend auto operator<=>(const QuadElem&, const QuadElem&) = default;
};

inline bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int k = 2; k * k <= p; ++k) {
        if (p % k == 0) return false;
    }
    return true;
}

class PrimeField {
public:
    using Elem = Residue;

    /// Any prime below 2^16 is accepted; operations that need odd p check it themselves.
    explicit PrimeField(Int p) : p_(static_cast<std::uint32_t>(p)) {
        if (!is_prime(p) || p >= (1 << 16)) {
            throw std::invalid_argument("field characteristic must be a prime below 65536, got " + std::to_string(p));
        }
    }

    std::uint32_t characteristic() const { return p_; }
    Int order() const { return p_; }
    bool is_odd() const { return p_ != 2; }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    Elem from_int(Int x) const {
        Int r = x % static_cast<Int>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    bool is_zero(Elem a) const { return a.v == 0; }
    Elem add(Elem a, Elem b) const { return {(a.v + b.v) % p_}; }
    Elem sub(Elem a, Elem b) const { return {(a.v + p_ - b.v) % p_}; }
    Elem neg(Elem a) const { return {(p_ - a.v) % p_}; }
    Elem mul(Elem a, Elem b) const { return {static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % p_)}; }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a.v == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    /// Nonzero squares; zero counts as a square.
    bool is_square(Elem a) const {
        if (a.v == 0 || p_ == 2) return true;
        return pow(a, (p_ - 1) / 2).v == 1;
    }

    std::optional<Elem> sqrt(Elem a) const {
        for (std::uint32_t x = 0; x < p_; ++x) {
            if (mul({x}, {x}) == a) return Elem{x};
        }
        return std::nullopt;
    }

    Elem smallest_nonresidue() const {
        require_odd("quadratic non-residue");
        for (std::uint32_t d = 2; d < p_; ++d) {
            if (!is_square({d})) return {d};
        }
        throw std::logic_error("no quadratic non-residue found");
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> out(p_);
        for (std::uint32_t i = 0; i < p_; ++i) out[i] = {i};
        return out;
    }

    Elem frobenius(Elem a) const { return a; }

    void require_odd(const char* what) const {
        if (p_ == 2) throw std::invalid_argument(std::string(what) + " requires an odd prime, got p = 2");
    }

private:
    std::uint32_t p_;
};

class QuadraticField {
public:
    using Elem = QuadElem;

    explicit QuadraticField(const PrimeField& base) : base_(base), d_{0} {
        base_.require_odd("the quadratic extension");
        d_ = base_.smallest_nonresidue();
    }

    const PrimeField& base() const { return base_; }
    Residue nonresidue() const { return d_; }
    std::uint32_t characteristic() const { return base_.characteristic(); }
    Int order() const { return base_.order() * base_.order(); }

    Elem zero() const { return {}; }
    Elem one() const { return {{1}, {0}}; }
    Elem from_int(Int x) const { return embed(base_.from_int(x)); }
    Elem embed(Residue a) const { return {a, {0}}; }
    Elem sqrt_d() const { return {{0}, {1}}; }

    bool is_zero(Elem a) const { return a.re.v == 0 && a.im.v == 0; }
    bool in_base_field(Elem a) const { return a.im.v == 0; }

    Elem add(Elem a, Elem b) const { return {base_.add(a.re, b.re), base_.add(a.im, b.im)}; }
    Elem sub(Elem a, Elem b) const { return {base_.sub(a.re, b.re), base_.sub(a.im, b.im)}; }
    Elem neg(Elem a) const { return {base_.neg(a.re), base_.neg(a.im)}; }
    Elem mul(Elem a, Elem b) const {
        const auto& F = base_;
        return {F.add(F.mul(a.re, b.re), F.mul(d_, F.mul(a.im, b.im))),
                F.add(F.mul(a.re, b.im), F.mul(a.im, b.re))};
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// a + b√d ↦ a − b√d, the p-power map.
    Elem frobenius(Elem a) const { return {a.re, base_.neg(a.im)}; }

    Residue norm(Elem a) const { return base_.sub(base_.mul(a.re, a.re), base_.mul(d_, base_.mul(a.im, a.im))); }

    Elem inv(Elem a) const {
        const Residue nrm = norm(a);
        if (nrm.v == 0) throw std::domain_error("division by zero in F_p^2");
        const Residue ni = base_.inv(nrm);
        return {base_.mul(a.re, ni), base_.neg(base_.mul(a.im, ni))};
    }

    /// Every element of F_p has a square root in F_{p²}.
    Elem sqrt_of_base(Residue a) const {
        if (auto r = base_.sqrt(a)) return embed(*r);
        // a/d is a square in F_p, and sqrt(a) = sqrt(a/d)·√d.
        const auto r = base_.sqrt(base_.mul(a, base_.inv(d_)));
        if (!r) throw std::logic_error("square root of a non-residue over d failed");
        return {{0}, *r};
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        const auto p = base_.characteristic();
        out.reserve(static_cast<std::size_t>(p) * p);
        for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) out.push_back({{a}, {b}});
        }
        return out;
    }

private:
    PrimeField base_;
    Residue d_;
};

template <class F>
concept FiniteField = requires(const F& f, typename F::Elem a, typename F::Elem b) {
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.frobenius(a) } -> std::same_as<typename F::Elem>;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
};

// ---- 2x2 matrices ----------------------------------------------------------

/// Row-major [[a, b], [c, d]].
template <class E>
struct Mat2 {
    E a, b, c, d;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

template <class E>
struct Vec2 {
    E x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

template <FiniteField F>
using MatOf = Mat2<typename F::Elem>;

template <FiniteField F>
MatOf<F> identity(const F& f) {
    return {f.one(), f.zero(), f.zero(), f.one()};
}

template <FiniteField F>
MatOf<F> scalar_matrix(const F& f, typename F::Elem s) {
    return {s, f.zero(), f.zero(), s};
}

template <FiniteField F>
MatOf<F> mat_add(const F& f, const MatOf<F>& x, const MatOf<F>& y) {
    return {f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c), f.add(x.d, y.d)};
}

template <FiniteField F>
MatOf<F> mat_sub(const F& f, const MatOf<F>& x, const MatOf<F>& y) {
    return {f.sub(x.a, y.a), f.sub(x.b, y.b), f.sub(x.c, y.c), f.sub(x.d, y.d)};
}

template <FiniteField F>
MatOf<F> mat_neg(const F& f, const MatOf<F>& x) {
    return {f.neg(x.a), f.neg(x.b), f.neg(x.c), f.neg(x.d)};
}

template <FiniteField F>
MatOf<F> mat_scale(const F& f, typename F::Elem s, const MatOf<F>& x) {
    return {f.mul(s, x.a), f.mul(s, x.b), f.mul(s, x.c), f.mul(s, x.d)};
}

template <FiniteField F>
MatOf<F> mat_mul(const F& f, const MatOf<F>& x, const MatOf<F>& y) {
    return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
            f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

template <FiniteField F>
Vec2<typename F::Elem> mat_apply(const F& f, const MatOf<F>& m, const Vec2<typename F::Elem>& v) {
    return {f.add(f.mul(m.a, v.x), f.mul(m.b, v.y)), f.add(f.mul(m.c, v.x), f.mul(m.d, v.y))};
}

template <FiniteField F>
typename F::Elem det(const F& f, const MatOf<F>& m) {
    return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

template <FiniteField F>
typename F::Elem trace(const F& f, const MatOf<F>& m) {
    return f.add(m.a, m.d);
}

template <FiniteField F>
bool is_invertible(const F& f, const MatOf<F>& m) {
    return !f.is_zero(det(f, m));
}

template <FiniteField F>
bool is_scalar(const F& f, const MatOf<F>& m) {
    return f.is_zero(m.b) && f.is_zero(m.c) && m.a == m.d;
}

template <FiniteField F>
MatOf<F> mat_inverse(const F& f, const MatOf<F>& m) {
    const auto di = f.inv(det(f, m));
    return {f.mul(m.d, di), f.neg(f.mul(m.b, di)), f.neg(f.mul(m.c, di)), f.mul(m.a, di)};
}

template <FiniteField F>
MatOf<F> mat_pow(const F& f, MatOf<F> x, std::uint64_t e) {
    MatOf<F> r = identity(f);
    while (e) {
        if (e & 1) r = mat_mul(f, r, x);
        x = mat_mul(f, x, x);
        e >>= 1;
    }
    return r;
}

template <FiniteField F>
bool commutes(const F& f, const MatOf<F>& x, const MatOf<F>& y) {
    return mat_mul(f, x, y) == mat_mul(f, y, x);
}

template <FiniteField F>
MatOf<F> mat_frobenius(const F& f, const MatOf<F>& m) {
    return {f.frobenius(m.a), f.frobenius(m.b), f.frobenius(m.c), f.frobenius(m.d)};
}

/// Discriminant tr² − 4·det of the characteristic polynomial.
template <FiniteField F>
typename F::Elem discriminant(const F& f, const MatOf<F>& m) {
    const auto t = trace(f, m);
    return f.sub(f.mul(t, t), f.mul(f.from_int(4), det(f, m)));
}

/// Id + A + ... + A^(n−1), accumulated term by term.
template <FiniteField F>
MatOf<F> phi_n(const F& f, const MatOf<F>& a, Int n) {
    if (n < 1) throw std::invalid_argument("phi_n requires n >= 1");
    MatOf<F> term = identity(f);
    MatOf<F> sum = term;
    for (Int k = 1; k < n; ++k) {
        term = mat_mul(f, term, a);
        sum = mat_add(f, sum, term);
    }
    return sum;
}

/// All invertible matrices, in lexicographic entry order.
template <FiniteField F>
std::vector<MatOf<F>> general_linear_group(const F& f) {
    const auto elems = f.elements();
    std::vector<MatOf<F>> out;
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                for (const auto& d : elems) {
                    MatOf<F> m{a, b, c, d};
                    if (is_invertible(f, m)) out.push_back(m);
                }
    return out;
}

inline Int gl2_order(Int p) { return (p * p - 1) * (p * p - p); }

// ---- classification over F_p -------------------------------------------------

/// Rank-2 Jordan type of a single matrix: scalar, repeated eigenvalue, distinct eigenvalues.
enum class JordanKind { scalar = 0, jordan_block = 1, distinct = 2 };

inline JordanKind jordan_kind(const PrimeField& f, const MatOf<PrimeField>& m) {
    if (is_scalar(f, m)) return JordanKind::scalar;
    return f.is_zero(discriminant(f, m)) ? JordanKind::jordan_block : JordanKind::distinct;
}

/// Admissible (n, p): p an odd prime with p ≡ 1 (mod n).
inline bool is_admissible(Int n, Int p) { return n >= 1 && p > 2 && is_prime(p) && (p - 1) % n == 0; }

/**
 * Stratum (type of A, type of Aⁿ). Requires A invertible, p odd and p ≡ 1 (mod n);
 * under those conditions only the four legal pairs occur.
 */
inline Stratum2 classify_stratum(const PrimeField& f, const MatOf<PrimeField>& a, Int n) {
    f.require_odd("classify_stratum");
    if (n < 1 || (static_cast<Int>(f.characteristic()) - 1) % n != 0) {
        throw std::invalid_argument("classify_stratum requires p ≡ 1 (mod n)");
    }
    if (!is_invertible(f, a)) throw std::invalid_argument("classify_stratum requires an invertible matrix");
    const auto fine = jordan_kind(f, a);
    const auto coarse = jordan_kind(f, mat_pow(f, a, static_cast<std::uint64_t>(n)));
    if (fine == coarse) return static_cast<Stratum2>(static_cast<int>(fine));
    if (fine == JordanKind::distinct && coarse == JordanKind::scalar) return Stratum2::xi2_xi0;
    throw std::logic_error("illegal stratum pair; admissibility preconditions violated");
}

// ---- the fibre map T ------------------------------------------------------

/// Rank of a 2×4 matrix given by rows, by Gaussian elimination.
template <FiniteField F>
int rank_2x4(const F& f, std::array<std::array<typename F::Elem, 4>, 2> rows) {
    int rank = 0;
    for (int col = 0; col < 4 && rank < 2; ++col) {
        int pivot = -1;
        for (int r = rank; r < 2; ++r) {
            if (!f.is_zero(rows[r][col])) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto inv = f.inv(rows[rank][col]);
        for (int r = 0; r < 2; ++r) {
            if (r == rank || f.is_zero(rows[r][col])) continue;
            const auto factor = f.mul(rows[r][col], inv);
            for (int k = 0; k < 4; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

/**
 * Rank of T(α, β) = (B0 − Id)·Φ_n(A0)·α − (A0ⁿ − Id)·β, i.e. of the block matrix
 * [(B0 − Id)Φ_n(A0) | −(A0ⁿ − Id)]. The fibre of the affine lift over (A0, B0)
 * has dimension 4 − rank.
 */
template <FiniteField F>
int rank_T(const F& f, const MatOf<F>& a0, const MatOf<F>& b0, Int n) {
    const auto id = identity(f);
    const auto left = mat_mul(f, mat_sub(f, b0, id), phi_n(f, a0, n));
    const auto right = mat_neg(f, mat_sub(f, mat_pow(f, a0, static_cast<std::uint64_t>(n)), id));
    return rank_2x4(f, {{{left.a, left.b, right.a, right.b}, {left.c, left.d, right.c, right.d}}});
}

/// Same map with Φ_n(A0) and A0ⁿ supplied by the caller.
template <FiniteField F>
int rank_T_precomputed(const F& f, const MatOf<F>& phi, const MatOf<F>& a0n, const MatOf<F>& b0) {
    const auto id = identity(f);
    const auto left = mat_mul(f, mat_sub(f, b0, id), phi);
    const auto right = mat_neg(f, mat_sub(f, a0n, id));
    return rank_2x4(f, {{{left.a, left.b, right.a, right.b}, {left.c, left.d, right.c, right.d}}});
}

/// Rank-1 analogue: rank of the 1×2 matrix [(b0 − 1)Φ_n(a0), −(a0ⁿ − 1)].
inline int rank_T1(const PrimeField& f, Residue a0, Residue b0, Int n) {
    Residue phi = f.zero();
    Residue term = f.one();
    for (Int k = 0; k < n; ++k) {
        phi = f.add(phi, term);
        term = f.mul(term, a0);
    }
    const Residue left = f.mul(f.sub(b0, f.one()), phi);
    const Residue right = f.sub(f.pow(a0, static_cast<std::uint64_t>(n)), f.one());
    return (f.is_zero(left) && f.is_zero(right)) ? 0 : 1;
}

// ---- invariant lines -----------------------------------------------------

/// Kernel vector of a rank-1 matrix: (1, t) when possible, else (0, 1).
template <FiniteField F>
Vec2<typename F::Elem> kernel_vector(const F& f, const MatOf<F>& m) {
    // Any nonzero row (r0, r1) determines the kernel line.
    auto r0 = m.a, r1 = m.b;
    if (f.is_zero(r0) && f.is_zero(r1)) {
        r0 = m.c;
        r1 = m.d;
    }
    if (!f.is_zero(r1)) return {f.one(), f.neg(f.mul(r0, f.inv(r1)))};
    return {f.zero(), f.one()};
}

/**
 * Eigenlines over F_{p²} of a matrix over F_p. Empty result for a scalar matrix,
 * meaning every line is invariant.
 */
inline std::vector<Vec2<QuadElem>> eigenlines(const QuadraticField& k, const MatOf<PrimeField>& a) {
    const auto& f = k.base();
    if (is_scalar(f, a)) return {};
    const MatOf<QuadraticField> ak{k.embed(a.a), k.embed(a.b), k.embed(a.c), k.embed(a.d)};
    const auto root = k.sqrt_of_base(discriminant(f, a));
    const auto half = k.inv(k.from_int(2));
    const auto tr = k.embed(trace(f, a));
    std::vector<Vec2<QuadElem>> lines;
    for (const auto& s : {root, k.neg(root)}) {
        const auto lambda = k.mul(k.add(tr, s), half);
        const auto v = kernel_vector(k, mat_sub(k, ak, scalar_matrix(k, lambda)));
        if (lines.empty() || !(lines.front() == v)) lines.push_back(v);
    }
    return lines;
}

inline bool preserves_line(const QuadraticField& k, const MatOf<PrimeField>& b, const Vec2<QuadElem>& v) {
    const MatOf<QuadraticField> bk{k.embed(b.a), k.embed(b.b), k.embed(b.c), k.embed(b.d)};
    const auto w = mat_apply(k, bk, v);
    return k.is_zero(k.sub(k.mul(v.x, w.y), k.mul(v.y, w.x)));
}

/// True iff A and B share an eigenvector over F_{p²}.
inline bool has_common_invariant_line(const QuadraticField& k, const MatOf<PrimeField>& a,
                                      const MatOf<PrimeField>& b) {
    const auto lines = eigenlines(k, a);
    // A scalar: any eigenline of B works, and B always has one over F_{p²}.
    if (lines.empty()) return true;
    for (const auto& v : lines) {
        if (preserves_line(k, b, v)) return true;
    }
    return false;
}

inline bool has_common_invariant_line(const PrimeField& f, const MatOf<PrimeField>& a, const MatOf<PrimeField>& b) {
    return has_common_invariant_line(QuadraticField(f), a, b);
}

}  // namespace hopf
