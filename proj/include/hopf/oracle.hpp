#pragma once

/**
 * @file oracle.hpp
 * @brief Exact point counts over F_p and F_{p²} that the closed forms are checked against.
 *
 * Counts never use the formulas. The GL2 counts come either from a double loop over
 * GL2(F_p) (naive) or from conjugacy-class representatives weighted by class size,
 * with centralizer orders fixed by type (class_based). AGL counts sum p^(dim ker T)
 * over base solutions. Quotients are counted as averages of plain and
 * Frobenius-twisted counts on explicit models.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/checked.hpp"
#include "hopf/equivariant.hpp"
#include "hopf/finite_field.hpp"
#include "hopf/jordan_types.hpp"
#include "hopf/parallel.hpp"

namespace hopf {

using MatP = MatOf<PrimeField>;
using MatK = MatOf<QuadraticField>;

class InadmissibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require_prime(Int p) {
    if (!is_prime(p)) throw InadmissibleError("p=" + std::to_string(p) + " is not prime");
}

/// Throws InadmissibleError unless p is an odd prime with p ≡ 1 (mod n).
inline void require_admissible(Int n, Int p) {
    require_twist(n);
    require_prime(p);
    if (p == 2) throw InadmissibleError("p=2 inadmissible for n=" + std::to_string(n) + " (p must be odd)");
    if ((p - 1) % n != 0) {
        throw InadmissibleError("p=" + std::to_string(p) + " inadmissible for n=" + std::to_string(n) + " (" +
                                std::to_string(p) + " ≢ 1 mod " + std::to_string(n) + ")");
    }
}

enum class Strategy { naive, class_based };

inline std::string_view strategy_name(Strategy s) { return s == Strategy::naive ? "naive" : "class_based"; }

inline Strategy parse_strategy(std::string_view s) {
    if (s == "naive") return Strategy::naive;
    if (s == "class_based") return Strategy::class_based;
    throw std::invalid_argument("unknown strategy: " + std::string(s));
}

/// Largest prime for which the naive double loop over GL2(F_p) is permitted.
inline constexpr Int kNaiveMaxPrime = 7;

inline void require_naive_size(Int p) {
    if (p > kNaiveMaxPrime) {
        throw InadmissibleError("naive strategy requires p <= " + std::to_string(kNaiveMaxPrime) + ", got p=" +
                                std::to_string(p));
    }
}

// ---- conjugacy classes -----------------------------------------------------

enum class ClassKind { scalar, split, jordan, nonsplit };

struct ConjugacyClass {
    MatP rep;
    Int size;
    ClassKind kind;
};

/// Rational canonical representatives of GL2(F_p), p odd:
/// λ·Id, diag(a, b) with a < b, [[λ,0],[1,λ]], and companions [[0,−δ],[1,t]] of
/// irreducible x² − t x + δ.
inline std::vector<ConjugacyClass> conjugacy_classes(const PrimeField& f) {
    f.require_odd("conjugacy_classes");
    const Int p = f.order();
    const auto units = [&] {
        std::vector<Residue> u;
        for (std::uint32_t x = 1; x < f.characteristic(); ++x) u.push_back({x});
        return u;
    }();
    std::vector<ConjugacyClass> out;
    for (auto l : units) out.push_back({scalar_matrix(f, l), 1, ClassKind::scalar});
    for (auto a : units) {
        for (auto b : units) {
            if (a.v < b.v) out.push_back({{a, f.zero(), f.zero(), b}, p * (p + 1), ClassKind::split});
        }
    }
    for (auto l : units) out.push_back({{l, f.zero(), f.one(), l}, p * p - 1, ClassKind::jordan});
    for (auto t : f.elements()) {
        for (auto d : units) {
            const auto disc = f.sub(f.mul(t, t), f.mul(f.from_int(4), d));
            if (!f.is_square(disc)) out.push_back({{f.zero(), f.neg(d), f.one(), t}, p * (p - 1), ClassKind::nonsplit});
        }
    }
    return out;
}

/// |Z(M)| for M ∈ GL2(F_p), read off from the conjugacy type of M.
inline Int centralizer_order(const PrimeField& f, const MatP& m) {
    const Int p = f.order();
    if (is_scalar(f, m)) return gl2_order(p);
    const auto disc = discriminant(f, m);
    if (f.is_zero(disc)) return p * (p - 1);
    return f.is_square(disc) ? (p - 1) * (p - 1) : p * p - 1;
}

// ---- GL2 representation variety ------------------------------------------

/// #{(A, B) ∈ GL2(F_p)² : AⁿB = BAⁿ}. p = 2 is accepted for the naive count at n = 1.
inline Int count_rep_gl2(Int n, Int p, Strategy strategy, unsigned jobs = 0) {
    const bool smoke = strategy == Strategy::naive && p == 2 && n == 1;
    if (!smoke) require_admissible(n, p);
    const PrimeField f(p);
    const auto e = static_cast<std::uint64_t>(n);
    const auto sum = [](Int a, Int b) { return checked_add(a, b); };
    if (strategy == Strategy::naive) {
        require_naive_size(p);
        const auto G = general_linear_group(f);
        return parallel_reduce(G.size(), jobs, Int{0}, [&](std::size_t lo, std::size_t hi) {
            Int acc = 0;
            for (std::size_t i = lo; i < hi; ++i) {
                const auto an = mat_pow(f, G[i], e);
                for (const auto& b : G) acc += commutes(f, an, b) ? 1 : 0;
            }
            return acc;
        }, sum);
    }
    const auto classes = conjugacy_classes(f);
    return parallel_reduce(classes.size(), jobs, Int{0}, [&](std::size_t lo, std::size_t hi) {
        Int acc = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& c = classes[i];
            acc = checked_add(acc, checked_mul(c.size, centralizer_order(f, mat_pow(f, c.rep, e))));
        }
        return acc;
    }, sum);
}

using StratumCounts = std::array<Int, 4>;  ///< indexed by Stratum2

inline Int total_of(const StratumCounts& c) {
    Int t = 0;
    for (Int x : c) t = checked_add(t, x);
    return t;
}

namespace detail {

inline StratumCounts add_counts(StratumCounts a, const StratumCounts& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], b[i]);
    return a;
}

}  // namespace detail

/// Solutions binned by classify_stratum(A, n).
inline StratumCounts count_rep_gl2_strata(Int n, Int p, Strategy strategy = Strategy::class_based,
                                          unsigned jobs = 0) {
    require_admissible(n, p);
    const PrimeField f(p);
    const auto e = static_cast<std::uint64_t>(n);
    if (strategy == Strategy::naive) {
        require_naive_size(p);
        const auto G = general_linear_group(f);
        return parallel_reduce(G.size(), jobs, StratumCounts{}, [&](std::size_t lo, std::size_t hi) {
            StratumCounts acc{};
            for (std::size_t i = lo; i < hi; ++i) {
                const auto an = mat_pow(f, G[i], e);
                const auto s = static_cast<std::size_t>(classify_stratum(f, G[i], n));
                for (const auto& b : G) acc[s] += commutes(f, an, b) ? 1 : 0;
            }
            return acc;
        }, detail::add_counts);
    }
    const auto classes = conjugacy_classes(f);
    StratumCounts out{};
    for (const auto& c : classes) {
        const auto s = static_cast<std::size_t>(classify_stratum(f, c.rep, n));
        out[s] = checked_add(out[s], checked_mul(c.size, centralizer_order(f, mat_pow(f, c.rep, e))));
    }
    return out;
}

struct LociCounts {
    Int reducible = 0;
    Int irreducible = 0;
};

/**
 * Reducible/irreducible split: a pair is reducible iff A and B share an eigenline
 * over F_{p²}. naive tests every solution pair. class_based tests pairs only on
 * the (ξ2,ξ0) stratum and counts the other strata as reducible.
 */
inline LociCounts count_rep_gl2_loci(Int n, Int p, Strategy strategy = Strategy::class_based, unsigned jobs = 0) {
    require_admissible(n, p);
    const PrimeField f(p);
    const QuadraticField k(f);
    const auto e = static_cast<std::uint64_t>(n);
    const auto G = general_linear_group(f);
    const auto merge = [](LociCounts a, const LociCounts& b) {
        return LociCounts{checked_add(a.reducible, b.reducible), checked_add(a.irreducible, b.irreducible)};
    };
    // Binning of all (A, B) with B in GL2 for a fixed A whose n-th power is known.
    const auto bin_pairs = [&](const MatP& a, const MatP& an, Int weight, LociCounts& acc) {
        const auto lines = eigenlines(k, a);
        Int red = 0, irr = 0;
        for (const auto& b : G) {
            if (!commutes(f, an, b)) continue;
            bool shared = lines.empty();
            for (const auto& v : lines) shared = shared || preserves_line(k, b, v);
            (shared ? red : irr) += 1;
        }
        acc.reducible = checked_add(acc.reducible, checked_mul(weight, red));
        acc.irreducible = checked_add(acc.irreducible, checked_mul(weight, irr));
    };
    if (strategy == Strategy::naive) {
        require_naive_size(p);
        return parallel_reduce(G.size(), jobs, LociCounts{}, [&](std::size_t lo, std::size_t hi) {
            LociCounts acc;
            for (std::size_t i = lo; i < hi; ++i) bin_pairs(G[i], mat_pow(f, G[i], e), 1, acc);
            return acc;
        }, merge);
    }
    const auto classes = conjugacy_classes(f);
    return parallel_reduce(classes.size(), jobs, LociCounts{}, [&](std::size_t lo, std::size_t hi) {
        LociCounts acc;
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& c = classes[i];
            const auto an = mat_pow(f, c.rep, e);
            if (classify_stratum(f, c.rep, n) == Stratum2::xi2_xi0) {
                bin_pairs(c.rep, an, c.size, acc);
            } else {
                acc.reducible = checked_add(acc.reducible, checked_mul(c.size, centralizer_order(f, an)));
            }
        }
        return acc;
    }, merge);
}

// ---- Omega and the affine groups -----------------------------------------------

/// #{B ∈ GL2(F_p) : det(B − Id) = 0}
inline Int count_omega(Int p) {
    require_prime(p);
    const PrimeField f(p);
    Int count = 0;
    for (const auto& b : general_linear_group(f)) {
        if (f.is_zero(det(f, mat_sub(f, b, identity(f))))) ++count;
    }
    return count;
}

struct Agl1Counts {
    Int total = 0;
    std::array<Int, 3> sub{};  ///< a0 ∈ μn*; (a0,b0) = (1,1); the rest
};

inline Agl1Counts count_rep_agl1(Int n, Int p) {
    require_admissible(n, p);
    const PrimeField f(p);
    Agl1Counts out;
    for (std::uint32_t a = 1; a < f.characteristic(); ++a) {
        const Residue a0{a};
        const bool in_mu = f.pow(a0, static_cast<std::uint64_t>(n)) == f.one();
        for (std::uint32_t b = 1; b < f.characteristic(); ++b) {
            const Residue b0{b};
            const Int fibre = checked_pow(p, static_cast<unsigned>(2 - rank_T1(f, a0, b0, n)));
            const int s = (in_mu && a0 != f.one()) ? 0 : (a0 == f.one() && b0 == f.one()) ? 1 : 2;
            out.sub[s] = checked_add(out.sub[s], fibre);
            out.total = checked_add(out.total, fibre);
        }
    }
    return out;
}

struct Agl2Counts {
    Int total = 0;
    StratumCounts strata{};
    std::array<std::array<Int, 3>, 4> sub{};  ///< [stratum][substratum]
};

/// Substratum of the base point A0: 1 if 1 is an eigenvalue, else 0 if A0ⁿ − Id is singular, else 2.
inline int agl2_substratum(const PrimeField& f, const MatP& a0, const MatP& a0n) {
    if (f.is_zero(det(f, mat_sub(f, a0, identity(f))))) return 1;
    if (f.is_zero(det(f, mat_sub(f, a0n, identity(f))))) return 0;
    return 2;
}

inline Agl2Counts count_rep_agl2(Int n, Int p, Strategy strategy = Strategy::class_based, unsigned jobs = 0) {
    require_admissible(n, p);
    const PrimeField f(p);
    const auto e = static_cast<std::uint64_t>(n);
    const auto G = general_linear_group(f);
    std::array<Int, 5> fibre{};
    for (int r = 0; r <= 2; ++r) fibre[static_cast<std::size_t>(r)] = checked_pow(p, static_cast<unsigned>(4 - r));

    const auto add_base = [&](const MatP& a0, Int weight, Agl2Counts& acc) {
        const auto a0n = mat_pow(f, a0, e);
        const auto phi = phi_n(f, a0, n);
        const auto s = static_cast<std::size_t>(classify_stratum(f, a0, n));
        const auto sub = static_cast<std::size_t>(agl2_substratum(f, a0, a0n));
        Int sum = 0;
        for (const auto& b0 : G) {
            if (!commutes(f, a0n, b0)) continue;
            sum = checked_add(sum, fibre[static_cast<std::size_t>(rank_T_precomputed(f, phi, a0n, b0))]);
        }
        sum = checked_mul(sum, weight);
        acc.total = checked_add(acc.total, sum);
        acc.strata[s] = checked_add(acc.strata[s], sum);
        acc.sub[s][sub] = checked_add(acc.sub[s][sub], sum);
    };
    const auto merge = [](Agl2Counts a, const Agl2Counts& b) {
        a.total = checked_add(a.total, b.total);
        for (std::size_t s = 0; s < 4; ++s) {
            a.strata[s] = checked_add(a.strata[s], b.strata[s]);
            for (std::size_t i = 0; i < 3; ++i) a.sub[s][i] = checked_add(a.sub[s][i], b.sub[s][i]);
        }
        return a;
    };
    if (strategy == Strategy::naive) {
        require_naive_size(p);
        return parallel_reduce(G.size(), jobs, Agl2Counts{}, [&](std::size_t lo, std::size_t hi) {
            Agl2Counts acc;
            for (std::size_t i = lo; i < hi; ++i) add_base(G[i], 1, acc);
            return acc;
        }, merge);
    }
    const auto classes = conjugacy_classes(f);
    return parallel_reduce(classes.size(), jobs, Agl2Counts{}, [&](std::size_t lo, std::size_t hi) {
        Agl2Counts acc;
        for (std::size_t i = lo; i < hi; ++i) add_base(classes[i].rep, classes[i].size, acc);
        return acc;
    }, merge);
}

/// Total count of R_n(AGL_r)(F_p) for r ∈ {1, 2}.
inline Int count_rep_agl(int r, Int n, Int p, Strategy strategy = Strategy::class_based, unsigned jobs = 0) {
    if (r == 1) return count_rep_agl1(n, p).total;
    if (r == 2) return count_rep_agl2(n, p, strategy, jobs).total;
    throw std::invalid_argument("count_rep_agl supports r = 1 and r = 2 only");
}

// ---- twisted Frobenius counts --------------------------------------------

enum class ModelKey {
    torus2_swap,
    torus4_double_swap,
    charred_model,
    E_sigma1,
    E_sigma1_sigma0,
    E_sigma1_sigma1,
    E_minus_mu_blocks,
    pgl2_mod_diag_as_point_pairs,
    U_space,
    charirr_model,
    punctured_mu,
    mu_pairs_free,
    gl2_inner,
    torus_trivial,
};

inline constexpr std::array kAllModelKeys = {
    ModelKey::torus2_swap,     ModelKey::torus4_double_swap, ModelKey::charred_model,
    ModelKey::E_sigma1,        ModelKey::E_sigma1_sigma0,    ModelKey::E_sigma1_sigma1,
    ModelKey::E_minus_mu_blocks, ModelKey::pgl2_mod_diag_as_point_pairs, ModelKey::U_space,
    ModelKey::charirr_model,   ModelKey::punctured_mu,       ModelKey::mu_pairs_free,
    ModelKey::gl2_inner,       ModelKey::torus_trivial,
};

inline std::string_view model_name(ModelKey k) {
    switch (k) {
        case ModelKey::torus2_swap: return "torus2_swap";
        case ModelKey::torus4_double_swap: return "torus4_double_swap";
        case ModelKey::charred_model: return "charred_model";
        case ModelKey::E_sigma1: return "E_sigma1";
        case ModelKey::E_sigma1_sigma0: return "E_sigma1_sigma0";
        case ModelKey::E_sigma1_sigma1: return "E_sigma1_sigma1";
        case ModelKey::E_minus_mu_blocks: return "E_minus_mu_blocks";
        case ModelKey::pgl2_mod_diag_as_point_pairs: return "pgl2_mod_diag_as_point_pairs";
        case ModelKey::U_space: return "U_space";
        case ModelKey::charirr_model: return "charirr_model";
        case ModelKey::punctured_mu: return "punctured_mu";
        case ModelKey::mu_pairs_free: return "mu_pairs_free";
        case ModelKey::gl2_inner: return "gl2_inner";
        case ModelKey::torus_trivial: return "torus_trivial";
    }
    throw std::logic_error("unhandled ModelKey");
}

inline ModelKey parse_model(std::string_view name) {
    for (auto k : kAllModelKeys) {
        if (model_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown quotient model: " + std::string(name));
}

/// Whether the model's equations involve n (and so need an admissible n).
inline bool model_uses_n(ModelKey k) {
    switch (k) {
        case ModelKey::E_sigma1_sigma0:
        case ModelKey::E_sigma1_sigma1:
        case ModelKey::E_minus_mu_blocks:
        case ModelKey::charirr_model:
        case ModelKey::punctured_mu:
        case ModelKey::mu_pairs_free:
            return true;
        default:
            return false;
    }
}

/// The equivariant E-polynomial the model realizes.
inline EquivPoly model_expected(ModelKey k, Int n) {
    using K = EquivKey;
    switch (k) {
        case ModelKey::torus2_swap: return equiv_catalog(K::torus2_swap, n);
        case ModelKey::torus4_double_swap:
        case ModelKey::charred_model: {
            const auto t = equiv_catalog(K::torus2_swap, n);
            return t * t;
        }
        case ModelKey::E_sigma1: return equiv_catalog(K::E_sigma1, n);
        case ModelKey::E_sigma1_sigma0: return equiv_catalog(K::E_sigma1_sigma0, n);
        case ModelKey::E_sigma1_sigma1: return equiv_catalog(K::E_sigma1_sigma1, n);
        case ModelKey::E_minus_mu_blocks: return equiv_catalog(K::E_minus_mu_blocks, n);
        case ModelKey::pgl2_mod_diag_as_point_pairs: return equiv_catalog(K::pgl2_mod_diag, n);
        case ModelKey::U_space: return equiv_catalog(K::U_space, n);
        case ModelKey::charirr_model: return equiv_catalog(K::E_sigma1_sigma0, n) * equiv_catalog(K::U_space, n);
        case ModelKey::punctured_mu: return equiv_catalog(K::punctured_mu, n);
        case ModelKey::mu_pairs_free: return equiv_catalog(K::mu_pairs_free, n);
        case ModelKey::gl2_inner: return equiv_catalog(K::gl2_inner, n);
        case ModelKey::torus_trivial: return equiv_catalog(K::torus_trivial, n);
    }
    throw std::logic_error("unhandled ModelKey");
}

struct TwistedCounts {
    Int plain = 0;    ///< #X(F_p)
    Int twisted = 0;  ///< #{x ∈ X(F_{p²}) : Frob(x) = σ(x)}
};

namespace detail {

using Point = std::span<const QuadElem>;
using Membership = std::function<bool(Point)>;

/// σ(x)_i = sign_i · x_{image_i}; σ must be an involution with equal signs on 2-cycles.
struct SignedPerm {
    std::vector<int> image;
    std::vector<int> sign;
};

inline void enumerate_slots(const std::vector<std::vector<QuadElem>>& choices,
                            const std::function<void(std::vector<QuadElem>&, const std::vector<std::size_t>&)>& fill,
                            std::size_t arity, const Membership& member, Int& count) {
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<QuadElem> x(arity);
    while (true) {
        fill(x, idx);
        if (member(x)) ++count;
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] == choices[d].size()) idx[d++] = 0;
        if (d == idx.size()) break;
    }
}

inline TwistedCounts count_signed_perm(const QuadraticField& k, const SignedPerm& sigma, const Membership& member) {
    const std::size_t arity = sigma.image.size();
    std::vector<QuadElem> base, imaginary;
    for (auto a : k.base().elements()) {
        base.push_back(k.embed(a));
        imaginary.push_back(k.mul(k.embed(a), k.sqrt_d()));
    }
    const auto all = k.elements();
    TwistedCounts out;

    // Plain: every coordinate in F_p.
    {
        std::vector<std::vector<QuadElem>> choices(arity, base);
        enumerate_slots(choices, [&](std::vector<QuadElem>& x, const std::vector<std::size_t>& idx) {
            for (std::size_t i = 0; i < arity; ++i) x[i] = base[idx[i]];
        }, arity, member, out.plain);
    }
    // Twisted: fixed coordinates lie in F_p or in √d·F_p; a swapped pair is (x, ±Frob(x)).
    {
        std::vector<std::vector<QuadElem>> choices;
        std::vector<int> leader;  // coordinate driven by each slot
        for (std::size_t i = 0; i < arity; ++i) {
            const auto j = static_cast<std::size_t>(sigma.image[i]);
            if (j == i) {
                choices.push_back(sigma.sign[i] > 0 ? base : imaginary);
                leader.push_back(static_cast<int>(i));
            } else if (i < j) {
                if (sigma.sign[i] != sigma.sign[j]) throw std::logic_error("signed swap with unequal signs");
                choices.push_back(all);
                leader.push_back(static_cast<int>(i));
            }
        }
        enumerate_slots(choices, [&](std::vector<QuadElem>& x, const std::vector<std::size_t>& idx) {
            for (std::size_t s = 0; s < leader.size(); ++s) {
                const auto i = static_cast<std::size_t>(leader[s]);
                x[i] = choices[s][idx[s]];
                const auto j = static_cast<std::size_t>(sigma.image[i]);
                if (j != i) {
                    const auto fx = k.frobenius(x[i]);
                    x[j] = sigma.sign[i] > 0 ? fx : k.neg(fx);
                }
            }
        }, arity, member, out.twisted);
    }
    return out;
}

/// Two-coordinate models with an arbitrary involution, by brute force over F_{p²}².
inline TwistedCounts count_pairs_brute(const QuadraticField& k, const std::function<std::array<QuadElem, 2>(Point)>& sigma,
                                       const Membership& member) {
    TwistedCounts out;
    const auto all = k.elements();
    for (const auto& a : all) {
        for (const auto& b : all) {
            const std::array<QuadElem, 2> x{a, b};
            if (!member(x)) continue;
            if (k.in_base_field(a) && k.in_base_field(b)) ++out.plain;
            if (sigma(x) == std::array<QuadElem, 2>{k.frobenius(a), k.frobenius(b)}) ++out.twisted;
        }
    }
    return out;
}

}  // namespace detail

/// Plain and σ-twisted counts of a model.
inline TwistedCounts twisted_count(ModelKey key, Int n, Int p) {
    if (model_uses_n(key)) {
        require_admissible(n, p);
    } else {
        require_twist(n);
        require_prime(p);
        if (p == 2) throw InadmissibleError("twisted counts require an odd prime, got p=2");
    }
    const PrimeField f(p);
    const QuadraticField k(f);
    const auto e = static_cast<std::uint64_t>(n);
    const auto nz = [&](const QuadElem& x) { return !k.is_zero(x); };
    const auto in_mu = [&](const QuadElem& x) { return k.pow(x, e) == k.one(); };
    const auto sigma1 = [&](QuadElem a, QuadElem b) { return nz(a) && nz(b) && a != b; };
    const auto sigma1_sigma0 = [&](QuadElem a, QuadElem b) { return sigma1(a, b) && k.pow(a, e) == k.pow(b, e); };
    const auto sigma1_sigma1 = [&](QuadElem a, QuadElem b) { return sigma1(a, b) && k.pow(a, e) != k.pow(b, e); };
    const auto u_space = [&](QuadElem a, QuadElem d, QuadElem c) { return nz(c) && k.mul(a, d) != c; };
    const detail::SignedPerm swap2{{1, 0}, {1, 1}};
    using detail::Point;

    switch (key) {
        case ModelKey::torus2_swap:
            return detail::count_signed_perm(k, swap2, [&](Point x) { return nz(x[0]) && nz(x[1]); });
        case ModelKey::torus4_double_swap:
        case ModelKey::charred_model:
            return detail::count_signed_perm(k, {{1, 0, 3, 2}, {1, 1, 1, 1}}, [&](Point x) {
                return nz(x[0]) && nz(x[1]) && nz(x[2]) && nz(x[3]);
            });
        case ModelKey::E_sigma1:
            return detail::count_signed_perm(k, swap2, [&](Point x) { return sigma1(x[0], x[1]); });
        case ModelKey::E_sigma1_sigma0:
            return detail::count_signed_perm(k, swap2, [&](Point x) { return sigma1_sigma0(x[0], x[1]); });
        case ModelKey::E_sigma1_sigma1:
            return detail::count_signed_perm(k, swap2, [&](Point x) { return sigma1_sigma1(x[0], x[1]); });
        case ModelKey::E_minus_mu_blocks:
            return detail::count_signed_perm(k, swap2, [&](Point x) {
                return sigma1_sigma1(x[0], x[1]) && !in_mu(x[0]) && !in_mu(x[1]);
            });
        case ModelKey::pgl2_mod_diag_as_point_pairs: {
            // P¹ points as (1 : t) or (0 : 1); Frobenius acts on t.
            TwistedCounts out;
            const Int line = p + 1;
            out.plain = line * (line - 1);
            for (const auto& t : k.elements()) {
                if (!k.in_base_field(t)) ++out.twisted;  // P ≠ Frob(P) and (P, Frob(P)) is swapped to itself
            }
            return out;
        }
        case ModelKey::U_space:
            return detail::count_signed_perm(k, {{1, 0, 2}, {1, 1, 1}}, [&](Point x) { return u_space(x[0], x[1], x[2]); });
        case ModelKey::charirr_model:
            return detail::count_signed_perm(k, {{1, 0, 3, 2, 4}, {1, 1, 1, 1, 1}}, [&](Point x) {
                return sigma1_sigma0(x[0], x[1]) && u_space(x[2], x[3], x[4]);
            });
        case ModelKey::punctured_mu:
        case ModelKey::mu_pairs_free: {
            // (λ, ε) ↦ (ελ, ε⁻¹) with ε ∈ μn*.
            const bool punctured = key == ModelKey::punctured_mu;
            const auto member = [&](Point x) {
                const auto lam = x[0], eps = x[1];
                if (!nz(lam) || !in_mu(eps) || eps == k.one()) return false;
                if (punctured) return !in_mu(lam);
                return in_mu(lam) && lam != k.one() && k.mul(eps, lam) != k.one();
            };
            const auto sigma = [&](Point x) {
                return std::array<QuadElem, 2>{k.mul(x[1], x[0]), k.inv(x[1])};
            };
            return detail::count_pairs_brute(k, sigma, member);
        }
        case ModelKey::gl2_inner:
            // Conjugation by diag(1, −1): (a, b, c, d) ↦ (a, −b, −c, d).
            return detail::count_signed_perm(k, {{0, 1, 2, 3}, {1, -1, -1, 1}}, [&](Point x) {
                return k.mul(x[0], x[3]) != k.mul(x[1], x[2]);
            });
        case ModelKey::torus_trivial:
            return detail::count_signed_perm(k, {{0}, {1}}, [&](Point x) { return nz(x[0]); });
    }
    throw std::logic_error("unhandled ModelKey");
}

/// #(X/σ)(F_p) = (plain + twisted) / 2. An odd sum means the model is wrong and throws.
inline Int count_quotient(ModelKey key, Int n, Int p) {
    const auto c = twisted_count(key, n, p);
    const Int sum = checked_add(c.plain, c.twisted);
    if (sum % 2 != 0) {
        throw std::logic_error("odd plain + twisted count for model " + std::string(model_name(key)));
    }
    return sum / 2;
}

// ---- SL2 / GL2 relation ------------------------------------------------------

inline constexpr Int kSlGlMaxPrime = 5;

/**
 * ¼ Σ over (s1, s2) ∈ {±1}² of #{(A, B, λ1, λ2) over F_{p²} : A, B ∈ SL2, AⁿB = BAⁿ,
 * Frob(A) = s1·A, Frob(B) = s2·B, Frob(λi) = si·λi, λi ≠ 0}: the F_p-count of
 * (R_n(SL2) × (C*)²)/μ2².
 */
inline Int count_sl_gl_quotient(Int n, Int p, unsigned jobs = 0) {
    require_admissible(n, p);
    if (p > kSlGlMaxPrime) {
        throw InadmissibleError("SL/GL relation check requires p <= " + std::to_string(kSlGlMaxPrime) + ", got p=" +
                                std::to_string(p));
    }
    const PrimeField f(p);
    const QuadraticField k(f);
    const auto e = static_cast<std::uint64_t>(n);
    // SL2 matrices with Frob(M) = s·M: entries in F_p (s = 1) or in √d·F_p (s = −1).
    std::array<std::vector<MatK>, 2> twisted_sl;
    for (int s = 0; s < 2; ++s) {
        std::vector<QuadElem> line;
        for (auto a : f.elements()) line.push_back(s == 0 ? k.embed(a) : k.mul(k.embed(a), k.sqrt_d()));
        for (const auto& a : line)
            for (const auto& b : line)
                for (const auto& c : line)
                    for (const auto& d : line) {
                        const MatK m{a, b, c, d};
                        if (det(k, m) == k.one()) twisted_sl[static_cast<std::size_t>(s)].push_back(m);
                    }
    }
    const Int lambdas = p - 1;  // #{λ ≠ 0 : λ^p = ±λ}
    Int total = 0;
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            const auto& as = twisted_sl[static_cast<std::size_t>(s1)];
            const auto& bs = twisted_sl[static_cast<std::size_t>(s2)];
            const Int pairs = parallel_reduce(as.size(), jobs, Int{0}, [&](std::size_t lo, std::size_t hi) {
                Int acc = 0;
                for (std::size_t i = lo; i < hi; ++i) {
                    const auto an = mat_pow(k, as[i], e);
                    for (const auto& b : bs) acc += commutes(k, an, b) ? 1 : 0;
                }
                return acc;
            }, [](Int a, Int b) { return checked_add(a, b); });
            total = checked_add(total, checked_mul(pairs, lambdas * lambdas));
        }
    }
    if (total % 4 != 0) throw std::logic_error("SL/GL equivariant count not divisible by 4");
    return total / 4;
}

}  // namespace hopf
