#pragma once

/**
 * @file jordan_types.hpp
 * @brief Jordan types ξ = (σ, κ) of rank r, their S_r-equivalence classes, and
 *        the refinement relation that indexes strata of the representation variety.
 *
 * σ is a set partition of {1..r} (eigenvalue coincidences) and κ partitions each
 * block of σ into totally ordered chains (Jordan blocks). Up to relabeling, a type
 * is determined by its *shape*: the multiset over σ-blocks of the multiset of
 * chain lengths.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

inline constexpr int kMaxJordanRank = 6;

using Chain = std::vector<int>;  ///< totally ordered set of labels
using Block = std::vector<int>;  ///< block of σ, labels ascending

/// Chain lengths of one σ-block, sorted descending (an integer partition).
using BlockShape = std::vector<int>;
/// Block shapes sorted ascending; canonical invariant of the S_r-orbit.
using TypeShape = std::vector<BlockShape>;

struct JordanType {
    std::vector<Block> sigma;
    std::vector<std::vector<Chain>> kappa;  ///< kappa[i] partitions sigma[i]

    int rank() const {
        int r = 0;
        for (const auto& b : sigma) r += static_cast<int>(b.size());
        return r;
    }

    friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// Throws std::invalid_argument unless σ partitions {1..r} and each κ entry partitions its block.
inline void validate(const JordanType& t) {
    if (t.sigma.size() != t.kappa.size()) throw std::invalid_argument("kappa must have one entry per block");
    const int r = t.rank();
    std::vector<int> seen(static_cast<std::size_t>(r) + 1, 0);
    for (std::size_t i = 0; i < t.sigma.size(); ++i) {
        if (t.sigma[i].empty()) throw std::invalid_argument("empty block in sigma");
        for (int x : t.sigma[i]) {
            if (x < 1 || x > r || seen[x]++) throw std::invalid_argument("sigma is not a partition of {1..r}");
        }
        std::vector<int> in_chains;
        for (const auto& c : t.kappa[i]) {
            if (c.empty()) throw std::invalid_argument("empty chain in kappa");
            in_chains.insert(in_chains.end(), c.begin(), c.end());
        }
        std::vector<int> block = t.sigma[i];
        std::sort(block.begin(), block.end());
        std::sort(in_chains.begin(), in_chains.end());
        if (block != in_chains) throw std::invalid_argument("kappa entry does not partition its block");
    }
}

inline TypeShape shape_of(const JordanType& t) {
    TypeShape s;
    for (const auto& chains : t.kappa) {
        BlockShape b;
        for (const auto& c : chains) b.push_back(static_cast<int>(c.size()));
        std::sort(b.begin(), b.end(), std::greater<>{});
        s.push_back(std::move(b));
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Labeled representative of a shape: labels are handed out consecutively block by block.
inline JordanType from_shape(const TypeShape& shape) {
    JordanType t;
    int next = 1;
    for (const auto& bs : shape) {
        Block block;
        std::vector<Chain> chains;
        for (int len : bs) {
            Chain c;
            for (int k = 0; k < len; ++k) {
                c.push_back(next);
                block.push_back(next);
                ++next;
            }
            chains.push_back(std::move(c));
        }
        t.sigma.push_back(std::move(block));
        t.kappa.push_back(std::move(chains));
    }
    return t;
}

inline JordanType canonical(const JordanType& t) {
    validate(t);
    return from_shape(shape_of(t));
}

inline bool equivalent(const JordanType& a, const JordanType& b) { return shape_of(a) == shape_of(b); }

/// Enumeration order: fewer σ-blocks first, then shapes lexicographically.
inline bool canonical_less(const TypeShape& a, const TypeShape& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

namespace detail {

inline void integer_partitions(int n, int max_part, BlockShape& cur, std::vector<BlockShape>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        integer_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline void require_rank(int r) {
    if (r < 1 || r > kMaxJordanRank) {
        throw std::invalid_argument("Jordan rank must be in [1, " + std::to_string(kMaxJordanRank) + "], got " +
                                    std::to_string(r));
    }
}

// Can the chain-length multisets of `fine` blocks be grouped so that each group's
// union is exactly one coarse block's multiset?
inline bool group_cover(const TypeShape& fine, std::size_t idx, std::vector<std::vector<int>>& remaining) {
    if (idx == fine.size()) {
        return std::all_of(remaining.begin(), remaining.end(), [](const auto& r) { return r.empty(); });
    }
    const auto& piece = fine[idx];
    for (auto& rem : remaining) {
        std::vector<int> left = rem;
        bool fits = true;
        for (int len : piece) {
            auto it = std::find(left.begin(), left.end(), len);
            if (it == left.end()) {
                fits = false;
                break;
            }
            left.erase(it);
        }
        if (!fits) continue;
        std::swap(rem, left);
        if (group_cover(fine, idx + 1, remaining)) return true;
        std::swap(rem, left);
    }
    return false;
}

}  // namespace detail

/// One canonical representative per S_r-class, in canonical order.
inline std::vector<JordanType> enumerate_jordan_types(int r) {
    detail::require_rank(r);
    std::vector<BlockShape> atoms;
    for (int size = 1; size <= r; ++size) {
        BlockShape cur;
        detail::integer_partitions(size, size, cur, atoms);
    }
    std::sort(atoms.begin(), atoms.end());

    // Non-decreasing sequences of atoms with total size r.
    std::vector<TypeShape> shapes;
    TypeShape cur;
    std::function<void(std::size_t, int)> extend = [&](std::size_t from, int left) {
        if (left == 0) {
            shapes.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < atoms.size(); ++i) {
            const int sz = std::accumulate(atoms[i].begin(), atoms[i].end(), 0);
            if (sz > left) continue;
            cur.push_back(atoms[i]);
            extend(i, left - sz);
            cur.pop_back();
        }
    };
    extend(0, r);
    std::sort(shapes.begin(), shapes.end(), canonical_less);

    std::vector<JordanType> out;
    out.reserve(shapes.size());
    for (const auto& s : shapes) out.push_back(from_shape(s));
    return out;
}

/// ξ′ ⪯ ξ up to simultaneous relabeling. Throws on rank mismatch.
inline bool refines(const JordanType& fine, const JordanType& coarse) {
    validate(fine);
    validate(coarse);
    if (fine.rank() != coarse.rank()) throw std::invalid_argument("refines: rank mismatch");
    const auto fine_shape = shape_of(fine);
    std::vector<std::vector<int>> remaining;
    for (const auto& b : shape_of(coarse)) remaining.push_back(b);
    return detail::group_cover(fine_shape, 0, remaining);
}

/// Diagonalizable types: every Jordan chain has length one.
inline bool is_diagonalizable(const JordanType& t) {
    for (const auto& chains : t.kappa) {
        for (const auto& c : chains) {
            if (c.size() != 1) return false;
        }
    }
    return true;
}

/// Order of S_ξ: permutations of σ-blocks whose chain decompositions are equivalent.
inline long long block_symmetry_order(const JordanType& t) {
    const auto s = shape_of(t);
    long long order = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        for (std::size_t k = 2; k <= j - i; ++k) order *= static_cast<long long>(k);
        i = j;
    }
    return order;
}

struct StratumId {
    JordanType fine;    ///< type of A
    JordanType coarse;  ///< type of Aⁿ

    friend bool operator==(const StratumId&, const StratumId&) = default;
};

/// Index of a type within enumerate_jordan_types(rank).
inline std::size_t jordan_index(const JordanType& t) {
    const auto all = enumerate_jordan_types(t.rank());
    const auto s = shape_of(t);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (shape_of(all[i]) == s) return i;
    }
    throw std::logic_error("Jordan type missing from enumeration");
}

inline std::string jordan_token(const JordanType& t) { return "xi" + std::to_string(jordan_index(t)); }

/// "xi2_xi0" style token.
inline std::string stratum_token(const StratumId& s) { return jordan_token(s.fine) + "_" + jordan_token(s.coarse); }

/**
 * All pairs (fine, coarse) of representatives with fine ⪯ coarse. Diagonal pairs
 * come first in type order, then the proper refinements ordered by (fine, coarse).
 * For r = 2 this is (ξ0,ξ0), (ξ1,ξ1), (ξ2,ξ2), (ξ2,ξ0).
 */
inline std::vector<StratumId> stratum_pairs(int r) {
    const auto types = enumerate_jordan_types(r);
    std::vector<StratumId> out;
    for (const auto& t : types) out.push_back({t, t});
    for (std::size_t i = 0; i < types.size(); ++i) {
        for (std::size_t j = 0; j < types.size(); ++j) {
            if (i != j && refines(types[i], types[j])) out.push_back({types[i], types[j]});
        }
    }
    return out;
}

// ---- rank-2 specializations ------------------------------------------------

/// The four rank-2 strata, in stratum_pairs(2) order.
enum class Stratum2 { xi0_xi0 = 0, xi1_xi1 = 1, xi2_xi2 = 2, xi2_xi0 = 3 };

inline constexpr std::array kAllStrata2 = {Stratum2::xi0_xi0, Stratum2::xi1_xi1, Stratum2::xi2_xi2,
                                           Stratum2::xi2_xi0};

inline std::string_view stratum2_token(Stratum2 s) {
    switch (s) {
        case Stratum2::xi0_xi0: return "xi0_xi0";
        case Stratum2::xi1_xi1: return "xi1_xi1";
        case Stratum2::xi2_xi2: return "xi2_xi2";
        case Stratum2::xi2_xi0: return "xi2_xi0";
    }
    throw std::logic_error("unhandled Stratum2");
}

inline Stratum2 parse_stratum2(std::string_view token) {
    for (auto s : kAllStrata2) {
        if (stratum2_token(s) == token) return s;
    }
    throw std::invalid_argument("unknown rank-2 stratum token: " + std::string(token));
}

inline StratumId stratum_id(Stratum2 s) { return stratum_pairs(2).at(static_cast<std::size_t>(s)); }

/// Order of S_{ξ′,ξ} for rank 2: the swap survives exactly on (ξ2,ξ2) and (ξ2,ξ0).
inline int stratum2_symmetry_order(Stratum2 s) {
    return (s == Stratum2::xi2_xi2 || s == Stratum2::xi2_xi0) ? 2 : 1;
}

/// Rendering such as "{(1,2)} | {(3)}" listing the chains of each σ-block.
inline std::string describe(const JordanType& t) {
    std::string out;
    for (std::size_t i = 0; i < t.kappa.size(); ++i) {
        if (i) out += " | ";
        out += '{';
        for (std::size_t c = 0; c < t.kappa[i].size(); ++c) {
            if (c) out += ',';
            out += '(';
            for (std::size_t k = 0; k < t.kappa[i][c].size(); ++k) {
                if (k) out += ',';
                out += std::to_string(t.kappa[i][c][k]);
            }
            out += ')';
        }
        out += '}';
    }
    return out;
}

}  // namespace hopf
