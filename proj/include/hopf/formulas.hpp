#pragma once

/**
 * @file formulas.hpp
 * @brief Closed-form motives of the representation and character varieties of the
 *        n-twisted Hopf link, as functions n ↦ MotivePoly.
 *
 * Each family is written as a factored form (scalar · q^k · Π factors^e) whose
 * entries depend on n through ⌊n/2⌋, ⌊(n−1)/2⌋, ⌊n²/2⌋ and ⌊(n²−1)/2⌋. Factored forms
 * are expanded by multiplication; check_identities() cross-checks the families
 * against each other and against products from the equivariant catalog.
 */

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/equivariant.hpp"
#include "hopf/jordan_types.hpp"
#include "hopf/motive_poly.hpp"
#include "hopf/quasi.hpp"

namespace hopf {

enum class FamilyTag {
    rep_gl2_total,
    rep_gl2_stratum,
    rep_gl2_irr,
    rep_gl2_red,
    char_gl2_total,
    char_gl2_red,
    char_gl2_irr,
    rep_agl1_total,
    rep_agl1_sub,
    rep_agl2_total,
    rep_agl2_stratum,
    rep_agl2_sub,
    omega,
};

/// A family of varieties indexed by n. `stratum` is read only by stratum-bearing
/// tags and `sub` only by substratum tags.
struct FamilyId {
    FamilyTag tag = FamilyTag::rep_gl2_total;
    Stratum2 stratum = Stratum2::xi0_xi0;
    int sub = 0;

    static FamilyId of(FamilyTag t) { return {t, Stratum2::xi0_xi0, 0}; }
    static FamilyId gl2_stratum(Stratum2 s) { return {FamilyTag::rep_gl2_stratum, s, 0}; }
    static FamilyId agl1_sub(int i) { return {FamilyTag::rep_agl1_sub, Stratum2::xi0_xi0, i}; }
    static FamilyId agl2_stratum(Stratum2 s) { return {FamilyTag::rep_agl2_stratum, s, 0}; }
    static FamilyId agl2_sub(Stratum2 s, int i) { return {FamilyTag::rep_agl2_sub, s, i}; }

    bool has_stratum() const {
        return tag == FamilyTag::rep_gl2_stratum || tag == FamilyTag::rep_agl2_stratum ||
               tag == FamilyTag::rep_agl2_sub;
    }
    bool has_sub() const { return tag == FamilyTag::rep_agl1_sub || tag == FamilyTag::rep_agl2_sub; }

    friend bool operator==(const FamilyId& a, const FamilyId& b) {
        return a.tag == b.tag && (!a.has_stratum() || a.stratum == b.stratum) && (!a.has_sub() || a.sub == b.sub);
    }

    std::string token() const;
    static FamilyId parse(std::string_view token);
};

inline std::string_view family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::rep_gl2_total: return "rep_gl2_total";
        case FamilyTag::rep_gl2_stratum: return "rep_gl2_stratum";
        case FamilyTag::rep_gl2_irr: return "rep_gl2_irr";
        case FamilyTag::rep_gl2_red: return "rep_gl2_red";
        case FamilyTag::char_gl2_total: return "char_gl2_total";
        case FamilyTag::char_gl2_red: return "char_gl2_red";
        case FamilyTag::char_gl2_irr: return "char_gl2_irr";
        case FamilyTag::rep_agl1_total: return "rep_agl1_total";
        case FamilyTag::rep_agl1_sub: return "rep_agl1_sub";
        case FamilyTag::rep_agl2_total: return "rep_agl2_total";
        case FamilyTag::rep_agl2_stratum: return "rep_agl2_stratum";
        case FamilyTag::rep_agl2_sub: return "rep_agl2_sub";
        case FamilyTag::omega: return "omega";
    }
    throw std::logic_error("unhandled FamilyTag");
}

inline constexpr std::array kAllFamilyTags = {
    FamilyTag::rep_gl2_total,  FamilyTag::rep_gl2_stratum, FamilyTag::rep_gl2_irr,      FamilyTag::rep_gl2_red,
    FamilyTag::char_gl2_total, FamilyTag::char_gl2_red,    FamilyTag::char_gl2_irr,     FamilyTag::rep_agl1_total,
    FamilyTag::rep_agl1_sub,   FamilyTag::rep_agl2_total,  FamilyTag::rep_agl2_stratum, FamilyTag::rep_agl2_sub,
    FamilyTag::omega,
};

/// Tokens: "rep_gl2_stratum:xi2_xi0", "rep_agl1_sub:1", "rep_agl2_sub:xi1_xi1:2", bare tag otherwise.
inline std::string FamilyId::token() const {
    std::string out(family_tag_name(tag));
    if (has_stratum()) {
        out += ':';
        out += stratum2_token(stratum);
    }
    if (has_sub()) {
        out += ':';
        out += std::to_string(sub);
    }
    return out;
}

inline FamilyId FamilyId::parse(std::string_view token) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = token.find(':', start);
        parts.push_back(token.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    const auto bad = [&] { return std::invalid_argument("unknown family: " + std::string(token)); };
    std::optional<FamilyTag> tag;
    for (auto t : kAllFamilyTags) {
        if (family_tag_name(t) == parts[0]) tag = t;
    }
    if (!tag) throw bad();
    FamilyId id = of(*tag);
    std::size_t expected = 1 + (id.has_stratum() ? 1 : 0) + (id.has_sub() ? 1 : 0);
    if (parts.size() != expected) throw bad();
    std::size_t next = 1;
    if (id.has_stratum()) id.stratum = parse_stratum2(parts[next++]);
    if (id.has_sub()) {
        const auto s = parts[next];
        int v = -1;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0 || v > 2) {
            throw std::invalid_argument("substratum index must be 0, 1 or 2 in family " + std::string(token));
        }
        id.sub = v;
    }
    return id;
}

/// Every family, strata and substrata included, in a fixed order.
inline std::vector<FamilyId> all_families() {
    std::vector<FamilyId> out;
    out.push_back(FamilyId::of(FamilyTag::rep_gl2_total));
    for (auto s : kAllStrata2) out.push_back(FamilyId::gl2_stratum(s));
    out.push_back(FamilyId::of(FamilyTag::rep_gl2_irr));
    out.push_back(FamilyId::of(FamilyTag::rep_gl2_red));
    out.push_back(FamilyId::of(FamilyTag::char_gl2_total));
    out.push_back(FamilyId::of(FamilyTag::char_gl2_red));
    out.push_back(FamilyId::of(FamilyTag::char_gl2_irr));
    out.push_back(FamilyId::of(FamilyTag::rep_agl1_total));
    for (int i = 0; i < 3; ++i) out.push_back(FamilyId::agl1_sub(i));
    out.push_back(FamilyId::of(FamilyTag::rep_agl2_total));
    for (auto s : kAllStrata2) out.push_back(FamilyId::agl2_stratum(s));
    for (auto s : kAllStrata2) {
        for (int i = 0; i < 3; ++i) out.push_back(FamilyId::agl2_sub(s, i));
    }
    out.push_back(FamilyId::of(FamilyTag::omega));
    return out;
}

/**
 * Named selections: "all", "totals", "gl2", "char", "agl1", "agl2", or a single
 * family token. Throws std::invalid_argument otherwise.
 */
inline std::vector<FamilyId> family_group(std::string_view name) {
    const auto all = all_families();
    const auto filter = [&](auto pred) {
        std::vector<FamilyId> out;
        for (const auto& f : all) {
            if (pred(f.tag)) out.push_back(f);
        }
        return out;
    };
    using T = FamilyTag;
    if (name == "all") return all;
    if (name == "totals") {
        return {FamilyId::of(T::rep_gl2_total), FamilyId::of(T::rep_agl1_total), FamilyId::of(T::rep_agl2_total)};
    }
    if (name == "gl2") {
        return filter([](T t) { return t == T::rep_gl2_total || t == T::rep_gl2_stratum || t == T::rep_gl2_irr ||
                                       t == T::rep_gl2_red; });
    }
    if (name == "char") {
        return filter([](T t) { return t == T::char_gl2_total || t == T::char_gl2_red || t == T::char_gl2_irr; });
    }
    if (name == "agl1") return filter([](T t) { return t == T::rep_agl1_total || t == T::rep_agl1_sub; });
    if (name == "agl2") {
        return filter([](T t) { return t == T::rep_agl2_total || t == T::rep_agl2_stratum || t == T::rep_agl2_sub; });
    }
    return {FamilyId::parse(name)};
}

// ---- factored forms ----------------------------------------------------------

struct Factor {
    MotivePoly base;
    unsigned exponent = 1;
};

/// scalar · q^q_power · Π base^exponent
struct Factored {
    Int scalar = 1;
    unsigned q_power = 0;
    std::vector<Factor> factors;

    MotivePoly expand() const {
        MotivePoly out = MotivePoly::monomial(scalar, q_power);
        for (const auto& f : factors) out *= f.base.pow(f.exponent);
        return out;
    }

    /// Pulls powers of q and constants out of the factors, so that e.g. a bracket
    /// that evaluates to q at some n merges into the q-power.
    Factored normalized() const {
        Factored out{scalar, q_power, {}};
        for (const auto& f : factors) {
            if (out.scalar == 0) break;
            auto c = f.base.coeffs();
            std::size_t low = 0;
            while (low < c.size() && c[low] == 0) ++low;
            if (low == c.size()) {
                out.scalar = 0;
                break;
            }
            out.q_power += static_cast<unsigned>(low) * f.exponent;
            MotivePoly rest(std::vector<Int>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
            if (rest.degree() == 0) {
                out.scalar = checked_mul(out.scalar, checked_pow(rest.coeff(0), f.exponent));
                continue;
            }
            auto same = std::find_if(out.factors.begin(), out.factors.end(),
                                     [&](const Factor& g) { return g.base == rest; });
            if (same != out.factors.end()) {
                same->exponent += f.exponent;
            } else {
                out.factors.push_back({std::move(rest), f.exponent});
            }
        }
        if (out.scalar == 0) return Factored{0, 0, {}};
        return out;
    }

    /// Compact rendering such as "q^3(q+1)(q-1)^2(2q^2-1)" or "2q(q-1)".
    std::string to_string() const {
        const Factored f = normalized();
        if (f.scalar == 0) return "0";
        std::string out;
        const bool bare = f.q_power == 0 && f.factors.empty();
        if (f.scalar == -1 && !bare) {
            out += '-';
        } else if (f.scalar != 1 || bare) {
            out += std::to_string(f.scalar);
        }
        if (f.q_power > 0) {
            out += 'q';
            if (f.q_power > 1) out += '^' + std::to_string(f.q_power);
        }
        for (const auto& fac : f.factors) {
            out += '(' + fac.base.to_compact() + ')';
            if (fac.exponent > 1) out += '^' + std::to_string(fac.exponent);
        }
        return out;
    }
};

struct FormulaEntry {
    Factored factored;
    std::string_view origin;  ///< short description of where the closed form comes from
    MotivePoly expanded() const { return factored.expand(); }
};

namespace detail {

struct Params {
    Int n, h, h1, sq, sq1, pairs;
    explicit Params(Int n_) : n(n_) {
        require_twist(n);
        h = half_floor(n);
        h1 = half_floor_pred(n);
        sq = sq_half_floor(n);
        sq1 = sq_half_floor_pred(n);
        pairs = checked_mul(n - 1, n - 2) / 2;
    }
};

inline MotivePoly lin(Int a, Int b) { return MotivePoly{b, a}; }             // a q + b
inline MotivePoly quad(Int a, Int b, Int c) { return MotivePoly{c, b, a}; }  // a q² + b q + c
inline MotivePoly cubic(Int a, Int b, Int c, Int d) { return MotivePoly{d, c, b, a}; }

inline Factor qp1() { return {lin(1, 1), 1}; }
inline Factor qm1(unsigned e) { return {lin(1, -1), e}; }

// q(q+1)(q−1)³ · extra
inline Factored gl2_base(std::vector<Factor> extra = {}, unsigned q_power = 1) {
    Factored f{1, q_power, {qp1(), qm1(3)}};
    for (auto& e : extra) f.factors.push_back(std::move(e));
    return f;
}

// q³(q+1)(q−1)² · extra, with optional scalar and extra q-powers
inline Factored agl2_base(std::vector<Factor> extra, Int scalar = 1, unsigned q_power = 3) {
    Factored f{scalar, q_power, {qp1(), qm1(2)}};
    for (auto& e : extra) f.factors.push_back(std::move(e));
    return f;
}

inline FormulaEntry gl2_stratum(Stratum2 s, const Params& P) {
    switch (s) {
        case Stratum2::xi0_xi0:
            return {gl2_base(), "scalar A: C* x GL2"};
        case Stratum2::xi1_xi1:
            return {gl2_base(), "Jordan A: C* x (PGL2/C) x centralizer of J"};
        case Stratum2::xi2_xi2:
            return {gl2_base({{lin(1, -P.h - 1), 1}}), "quotient of E^{s1,s1} x PGL2/D x (C*)^2 by S2"};
        case Stratum2::xi2_xi0:
            return {gl2_base({{lin(P.h, P.h1), 1}}, 2), "quotient of E^{s1,s0} x PGL2/D x GL2 by S2"};
    }
    throw std::logic_error("unhandled Stratum2");
}

inline FormulaEntry agl2_sub(Stratum2 s, int i, const Params& P) {
    const Int n = P.n;
    const Factor generic{lin(1, -n - 1), 1};  // q − n − 1
    switch (s) {
        case Stratum2::xi0_xi0:
            if (i == 0) return {agl2_base({}, n - 1, 5), "A0 = lambda Id, lambda in mu_n*: rank T = 0"};
            if (i == 1) return {agl2_base({}, 2), "A0 = Id: fibre by rank(B0 - Id)"};
            return {agl2_base({generic}), "A0 = lambda Id, lambda outside mu_n: rank T = 2"};
        case Stratum2::xi1_xi1:
            if (i == 0) return {agl2_base({}, n - 1, 4), "A0 = J_lambda, lambda in mu_n*: rank T = 1"};
            if (i == 1) return {agl2_base({}, 2), "A0 = J_1: fibre by B0 in the centralizer"};
            return {agl2_base({generic}), "A0 = J_lambda, lambda outside mu_n: rank T = 2"};
        case Stratum2::xi2_xi2:
            if (i == 0) return {agl2_base({generic}, n - 1, 4), "one eigenvalue in mu_n*: rank T = 1"};
            if (i == 1) return {agl2_base({generic}, 2), "one eigenvalue equal to 1"};
            return {agl2_base({{quad(1, -(n + P.h + 2), n * n + n + P.h + 1), 1}}),
                    "no eigenvalue in mu_n: rank T = 2"};
        case Stratum2::xi2_xi0:
            if (i == 0) {
                return {Factored{P.pairs, 6, {{lin(1, 1), 2}, qm1(2)}}, "A0^n = Id, eigenvalues in mu_n*: rank T = 0"};
            }
            if (i == 1) {
                return {agl2_base({{lin(1, 2), 1}}, n - 1, 5), "A0^n = Id, one eigenvalue 1: fibre over Omega"};
            }
            return {agl2_base({{quad(P.h, P.h1 - P.sq, -P.sq1), 1}}, 1, 4),
                    "A0^n scalar != Id: (C* - mu_n) x mu_n* by S2"};
    }
    throw std::logic_error("unhandled Stratum2");
}

inline FormulaEntry agl2_stratum(Stratum2 s, const Params& P) {
    const Int n = P.n;
    switch (s) {
        case Stratum2::xi0_xi0:
            return {agl2_base({{quad(n - 1, 1, -n + 1), 1}}), "Alexander fibration over the (xi0,xi0) stratum"};
        case Stratum2::xi1_xi1:
            return {agl2_base({{lin(n, -n + 1), 1}}), "Alexander fibration over the (xi1,xi1) stratum"};
        case Stratum2::xi2_xi2:
            return {agl2_base({{quad(n, -(n * n + n + P.h - 1), n * n - n + P.h - 1), 1}}),
                    "Alexander fibration over the (xi2,xi2) stratum"};
        case Stratum2::xi2_xi0:
            return {agl2_base({{cubic(P.pairs, n * (n - 1) / 2 + P.h, 2 * (n - 1) + P.h1 - P.sq, -P.sq1), 1}}, 1, 4),
                    "Alexander fibration over the (xi2,xi0) stratum"};
    }
    throw std::logic_error("unhandled Stratum2");
}

}  // namespace detail

/// Factored closed form of a family at twist n.
inline FormulaEntry formula_entry(const FamilyId& f, Int n) {
    using namespace detail;
    const Params P(n);
    const Int h = P.h, h1 = P.h1;
    switch (f.tag) {
        case FamilyTag::rep_gl2_total:
            return {gl2_base({{quad(h, n - h, 1 - h), 1}}), "sum of the four GL2 strata"};
        case FamilyTag::rep_gl2_stratum:
            return gl2_stratum(f.stratum, P);
        case FamilyTag::rep_gl2_irr:
            return {gl2_base({{quad(h, -h, h1), 1}}), "irreducible part of the (xi2,xi0) stratum"};
        case FamilyTag::rep_gl2_red:
            return {gl2_base({{lin(n, 2 - n), 1}}), "reducible locus"};
        case FamilyTag::char_gl2_total:
            return {Factored{1, 0, {qm1(2), {quad(h + 1, -h, n - h), 1}}}, "reducible plus irreducible loci"};
        case FamilyTag::char_gl2_red:
            return {Factored{1, 0, {qm1(2), {quad(1, 0, 1), 1}}}, "((C*)^2 x (C*)^2)/S2"};
        case FamilyTag::char_gl2_irr:
            return {Factored{1, 0, {qm1(2), {quad(h, -h, h1), 1}}}, "(E^{s1,s0} x U)/S2"};
        case FamilyTag::rep_agl1_total:
            return {Factored{1, 1, {qm1(1), {lin(n, 1 - n), 1}}}, "Alexander fibration over R_n(GL1)"};
        case FamilyTag::rep_agl1_sub:
            if (f.sub == 0) return {Factored{n - 1, 2, {qm1(1)}}, "a0 in mu_n*: rank T = 0"};
            if (f.sub == 1) return {Factored{1, 2, {}}, "(a0, b0) = (1, 1)"};
            return {Factored{1, 1, {{quad(1, -(n + 1), n - 1), 1}}}, "remaining base points: rank T = 1"};
        case FamilyTag::rep_agl2_total: {
            const Int c4 = P.pairs;
            const Int c3 = n * (n - 1) / 2 + h;
            const Int c2 = 4 * n - 3 + h1 - P.sq;
            const Int c1 = -(n * n + h + P.sq1 - 2);
            const Int c0 = n * n - 3 * n + h + 1;
            return {agl2_base({{MotivePoly{c0, c1, c2, c3, c4}, 1}}), "sum of the four AGL2 strata"};
        }
        case FamilyTag::rep_agl2_stratum:
            return agl2_stratum(f.stratum, P);
        case FamilyTag::rep_agl2_sub:
            return agl2_sub(f.stratum, f.sub, P);
        case FamilyTag::omega:
            return {Factored{1, 1, {{quad(1, 0, -2), 1}}}, "GL2 matrices with eigenvalue 1"};
    }
    throw std::logic_error("unhandled FamilyTag");
}

inline MotivePoly motive_formula(const FamilyId& f, Int n) { return formula_entry(f, n).expanded(); }

struct Piece {
    std::string label;
    MotivePoly motive;
};

/// Substrata of rep_agl1_total or of an AGL2 stratum, in index order.
inline std::vector<Piece> substrata_breakdown(const FamilyId& f, Int n) {
    std::vector<Piece> out;
    if (f.tag == FamilyTag::rep_agl1_total) {
        for (int i = 0; i < 3; ++i) {
            const auto sub = FamilyId::agl1_sub(i);
            out.push_back({sub.token(), motive_formula(sub, n)});
        }
        return out;
    }
    if (f.tag == FamilyTag::rep_agl2_stratum) {
        for (int i = 0; i < 3; ++i) {
            const auto sub = FamilyId::agl2_sub(f.stratum, i);
            out.push_back({sub.token(), motive_formula(sub, n)});
        }
        return out;
    }
    throw std::invalid_argument("family has no substratum decomposition: " + f.token());
}

struct IdentityResult {
    std::string name;
    bool holds;
};

/// Exact polynomial identities among the families at twist n. Never throws on a
/// failed identity; failures are reported as holds = false.
inline std::vector<IdentityResult> check_identities(Int n) {
    require_twist(n);
    using T = FamilyTag;
    const auto F = [n](FamilyId f) { return motive_formula(f, n); };
    const auto q = MotivePoly::q();
    std::vector<IdentityResult> out;

    MotivePoly gl2_sum, agl2_sum;
    for (auto s : kAllStrata2) {
        gl2_sum += F(FamilyId::gl2_stratum(s));
        agl2_sum += F(FamilyId::agl2_stratum(s));
    }
    out.push_back({"gl2_strata_sum", gl2_sum == F(FamilyId::of(T::rep_gl2_total))});
    out.push_back({"gl2_irr_plus_red",
                   F(FamilyId::of(T::rep_gl2_irr)) + F(FamilyId::of(T::rep_gl2_red)) == F(FamilyId::of(T::rep_gl2_total))});
    out.push_back({"agl2_strata_sum", agl2_sum == F(FamilyId::of(T::rep_agl2_total))});
    out.push_back({"char_red_plus_irr", F(FamilyId::of(T::char_gl2_red)) + F(FamilyId::of(T::char_gl2_irr)) ==
                                            F(FamilyId::of(T::char_gl2_total))});

    std::vector<FamilyId> parents{FamilyId::of(T::rep_agl1_total)};
    for (auto s : kAllStrata2) parents.push_back(FamilyId::agl2_stratum(s));
    for (const auto& parent : parents) {
        MotivePoly sum;
        for (const auto& piece : substrata_breakdown(parent, n)) sum += piece.motive;
        out.push_back({"substrata_sum:" + parent.token(), sum == F(parent)});
    }

    if (n == 1) {
        out.push_back({"torus:rep_gl2_total", F(FamilyId::of(T::rep_gl2_total)) ==
                                                  q * (q + 1).pow(2) * (q - 1).pow(3)});
        out.push_back({"torus:rep_agl1_total", F(FamilyId::of(T::rep_agl1_total)) == q * q * (q - 1)});
        out.push_back({"torus:rep_agl2_total", F(FamilyId::of(T::rep_agl2_total)) ==
                                                   q.pow(3) * (q + 1) * (q - 1).pow(2) * (q * q + q - 1)});
    }

    // Strata rebuilt from the equivariant catalog.
    const auto E = [n](EquivKey k) { return equiv_catalog(k, n); };
    using K = EquivKey;
    out.push_back({"equivariant:rep_gl2_stratum:xi2_xi2",
                   (E(K::E_sigma1_sigma1) * E(K::pgl2_mod_diag) * E(K::torus2_swap)).quotient() ==
                       F(FamilyId::gl2_stratum(Stratum2::xi2_xi2))});
    out.push_back({"equivariant:rep_gl2_stratum:xi2_xi0",
                   (E(K::E_sigma1_sigma0) * E(K::pgl2_mod_diag) * E(K::gl2_inner)).quotient() ==
                       F(FamilyId::gl2_stratum(Stratum2::xi2_xi0))});
    out.push_back({"equivariant:char_gl2_irr",
                   (E(K::E_sigma1_sigma0) * E(K::U_space)).quotient() == F(FamilyId::of(T::char_gl2_irr))});
    out.push_back({"equivariant:char_gl2_red",
                   (E(K::torus2_swap) * E(K::torus2_swap)).quotient() == F(FamilyId::of(T::char_gl2_red))});
    out.push_back({"equivariant:rep_agl2_sub:xi2_xi2:2",
                   q * q * (E(K::E_minus_mu_blocks) * E(K::pgl2_mod_diag) * E(K::torus2_swap)).quotient() ==
                       F(FamilyId::agl2_sub(Stratum2::xi2_xi2, 2))});
    out.push_back({"equivariant:rep_agl2_sub:xi2_xi0:0",
                   q.pow(4) * (E(K::mu_pairs_free) * E(K::pgl2_mod_diag) * E(K::gl2_inner)).quotient() ==
                       F(FamilyId::agl2_sub(Stratum2::xi2_xi0, 0))});
    out.push_back({"equivariant:rep_agl2_sub:xi2_xi0:2",
                   q.pow(3) * (q + 1) * (q - 1).pow(2) * (E(K::punctured_mu) * E(K::pgl2_mod_diag)).quotient() ==
                       F(FamilyId::agl2_sub(Stratum2::xi2_xi0, 2))});
    out.push_back({"omega_catalog", F(FamilyId::of(T::omega)) == motives::omega()});
    return out;
}

}  // namespace hopf
