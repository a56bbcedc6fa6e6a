#pragma once

/**
 * @file verify.hpp
 * @brief Pairs each closed form with an independent count and records the verdict.
 *
 * A verification target is a family token ("rep_agl2_stratum:xi2_xi0"), a quotient
 * model ("twisted:charirr_model"), or the SL2/GL2 relation ("sl_gl_relation").
 * CellVerifier caches the expensive counts of one (n, p, strategy) cell so that a
 * whole suite over that cell enumerates each variety once.
 */

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hopf/formulas.hpp"
#include "hopf/oracle.hpp"

namespace hopf {

struct VerifyReport {
    std::string family;
    Int n = 0;
    Int p = 0;
    std::string strategy;
    Int formula_value = 0;
    Int counted_value = 0;
    double elapsed_ms = 0.0;
    std::vector<VerifyReport> breakdown;

    bool match() const { return formula_value == counted_value; }
    std::string_view verdict() const { return match() ? "match" : "mismatch"; }

    /// This report and every nested breakdown entry match.
    bool all_match() const {
        if (!match()) return false;
        for (const auto& b : breakdown) {
            if (!b.all_match()) return false;
        }
        return true;
    }
};

struct SlGlTarget {
    friend bool operator==(const SlGlTarget&, const SlGlTarget&) = default;
};

using VerifyTarget = std::variant<FamilyId, ModelKey, SlGlTarget>;

inline constexpr std::string_view kSlGlToken = "sl_gl_relation";
inline constexpr std::string_view kTwistedPrefix = "twisted:";

inline std::string target_token(const VerifyTarget& t) {
    if (const auto* f = std::get_if<FamilyId>(&t)) return f->token();
    if (const auto* m = std::get_if<ModelKey>(&t)) return std::string(kTwistedPrefix) + std::string(model_name(*m));
    return std::string(kSlGlToken);
}

inline VerifyTarget parse_target(std::string_view token) {
    if (token == kSlGlToken) return SlGlTarget{};
    if (token.starts_with(kTwistedPrefix)) return parse_model(token.substr(kTwistedPrefix.size()));
    return FamilyId::parse(token);
}

/**
 * Expands a selector into targets. Family groups as in family_group(), plus
 * "twisted" (every quotient model), "sl_gl_relation" and "twisted:<model>".
 */
inline std::vector<VerifyTarget> target_group(std::string_view name) {
    std::vector<VerifyTarget> out;
    if (name == "twisted") {
        for (auto m : kAllModelKeys) out.emplace_back(m);
        return out;
    }
    if (name == kSlGlToken || name.starts_with(kTwistedPrefix)) {
        out.push_back(parse_target(name));
        return out;
    }
    for (const auto& f : family_group(name)) out.emplace_back(f);
    return out;
}

/// Families with both a naive and a class_based count.
inline bool has_strategies(const FamilyId& f) {
    switch (f.tag) {
        case FamilyTag::rep_gl2_total:
        case FamilyTag::rep_gl2_stratum:
        case FamilyTag::rep_gl2_irr:
        case FamilyTag::rep_gl2_red:
        case FamilyTag::rep_agl2_total:
        case FamilyTag::rep_agl2_stratum:
        case FamilyTag::rep_agl2_sub:
            return true;
        default:
            return false;
    }
}

/// Checks that the target can run at (n, p, strategy); throws InadmissibleError otherwise.
inline void require_runnable(const VerifyTarget& t, Int n, Int p, Strategy strategy) {
    if (const auto* f = std::get_if<FamilyId>(&t)) {
        if (f->tag == FamilyTag::omega) {
            require_twist(n);
            require_prime(p);
            return;
        }
        const bool smoke = f->tag == FamilyTag::rep_gl2_total && strategy == Strategy::naive && p == 2 && n == 1;
        if (!smoke) require_admissible(n, p);
        if (strategy == Strategy::naive && has_strategies(*f)) require_naive_size(p);
        return;
    }
    if (const auto* m = std::get_if<ModelKey>(&t)) {
        if (model_uses_n(*m)) {
            require_admissible(n, p);
        } else {
            require_twist(n);
            require_prime(p);
            if (p == 2) throw InadmissibleError("twisted counts require an odd prime, got p=2");
        }
        return;
    }
    require_admissible(n, p);
    if (p > kSlGlMaxPrime) {
        throw InadmissibleError("SL/GL relation check requires p <= " + std::to_string(kSlGlMaxPrime) + ", got p=" +
                                std::to_string(p));
    }
}

class CellVerifier {
public:
    CellVerifier(Int n, Int p, Strategy strategy, unsigned jobs = 0) : n_(n), p_(p), strategy_(strategy), jobs_(jobs) {}

    VerifyReport verify(const VerifyTarget& t) {
        require_runnable(t, n_, p_, strategy_);
        const auto start = std::chrono::steady_clock::now();
        VerifyReport r;
        if (const auto* f = std::get_if<FamilyId>(&t)) {
            r = verify_family(*f);
        } else if (const auto* m = std::get_if<ModelKey>(&t)) {
            r = verify_model(*m);
        } else {
            r = verify_sl_gl();
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

private:
    VerifyReport make(std::string family, std::string_view strategy, Int formula, Int counted) const {
        VerifyReport r;
        r.family = std::move(family);
        r.n = n_;
        r.p = p_;
        r.strategy = std::string(strategy);
        r.formula_value = formula;
        r.counted_value = counted;
        return r;
    }

    Int formula_at_p(const FamilyId& f) const { return motive_formula(f, n_).eval(p_); }

    VerifyReport family_report(const FamilyId& f, std::string_view strategy, Int counted) const {
        return make(f.token(), strategy, formula_at_p(f), counted);
    }

    std::string_view strategy_label() const { return strategy_name(strategy_); }

    const StratumCounts& gl2_strata() {
        if (!gl2_strata_) gl2_strata_ = count_rep_gl2_strata(n_, p_, strategy_, jobs_);
        return *gl2_strata_;
    }
    const LociCounts& gl2_loci() {
        if (!gl2_loci_) gl2_loci_ = count_rep_gl2_loci(n_, p_, strategy_, jobs_);
        return *gl2_loci_;
    }
    const Agl1Counts& agl1() {
        if (!agl1_) agl1_ = count_rep_agl1(n_, p_);
        return *agl1_;
    }
    const Agl2Counts& agl2() {
        if (!agl2_) agl2_ = count_rep_agl2(n_, p_, strategy_, jobs_);
        return *agl2_;
    }
    const TwistedCounts& twisted(ModelKey m) {
        for (const auto& [key, counts] : twisted_) {
            if (key == m) return counts;
        }
        twisted_.emplace_back(m, twisted_count(m, n_, p_));
        return twisted_.back().second;
    }

    VerifyReport agl2_stratum_report(Stratum2 s) {
        const auto& c = agl2();
        const auto idx = static_cast<std::size_t>(s);
        auto r = family_report(FamilyId::agl2_stratum(s), strategy_label(), c.strata[idx]);
        for (int i = 0; i < 3; ++i) {
            r.breakdown.push_back(family_report(FamilyId::agl2_sub(s, i), strategy_label(), c.sub[idx][static_cast<std::size_t>(i)]));
        }
        return r;
    }

    VerifyReport verify_family(const FamilyId& f) {
        switch (f.tag) {
            case FamilyTag::rep_gl2_total: {
                if (p_ == 2) {
                    return family_report(f, strategy_label(), count_rep_gl2(n_, p_, strategy_, jobs_));
                }
                const auto& s = gl2_strata();
                auto r = family_report(f, strategy_label(), count_rep_gl2(n_, p_, strategy_, jobs_));
                for (auto st : kAllStrata2) {
                    r.breakdown.push_back(family_report(FamilyId::gl2_stratum(st), strategy_label(),
                                                        s[static_cast<std::size_t>(st)]));
                }
                return r;
            }
            case FamilyTag::rep_gl2_stratum:
                return family_report(f, strategy_label(), gl2_strata()[static_cast<std::size_t>(f.stratum)]);
            case FamilyTag::rep_gl2_irr:
                return family_report(f, strategy_label(), gl2_loci().irreducible);
            case FamilyTag::rep_gl2_red:
                return family_report(f, strategy_label(), gl2_loci().reducible);
            case FamilyTag::char_gl2_red:
                return quotient_family_report(f, ModelKey::charred_model);
            case FamilyTag::char_gl2_irr:
                return quotient_family_report(f, ModelKey::charirr_model);
            case FamilyTag::char_gl2_total: {
                auto red = quotient_family_report(FamilyId::of(FamilyTag::char_gl2_red), ModelKey::charred_model);
                auto irr = quotient_family_report(FamilyId::of(FamilyTag::char_gl2_irr), ModelKey::charirr_model);
                auto r = family_report(f, kTwistedStrategy, checked_add(red.counted_value, irr.counted_value));
                r.breakdown = {std::move(red), std::move(irr)};
                return r;
            }
            case FamilyTag::rep_agl1_total: {
                const auto& c = agl1();
                auto r = family_report(f, kEnumerationStrategy, c.total);
                for (int i = 0; i < 3; ++i) {
                    r.breakdown.push_back(family_report(FamilyId::agl1_sub(i), kEnumerationStrategy,
                                                        c.sub[static_cast<std::size_t>(i)]));
                }
                return r;
            }
            case FamilyTag::rep_agl1_sub:
                return family_report(f, kEnumerationStrategy, agl1().sub[static_cast<std::size_t>(f.sub)]);
            case FamilyTag::rep_agl2_total: {
                auto r = family_report(f, strategy_label(), agl2().total);
                for (auto s : kAllStrata2) r.breakdown.push_back(agl2_stratum_report(s));
                return r;
            }
            case FamilyTag::rep_agl2_stratum:
                return agl2_stratum_report(f.stratum);
            case FamilyTag::rep_agl2_sub:
                return family_report(f, strategy_label(), agl2().sub[static_cast<std::size_t>(f.stratum)][static_cast<std::size_t>(f.sub)]);
            case FamilyTag::omega:
                return family_report(f, kEnumerationStrategy, count_omega(p_));
        }
        throw std::logic_error("unhandled FamilyTag");
    }

    // An odd sum cannot be a quotient count; −1 keeps the verdict a mismatch.
    static Int halved(const TwistedCounts& c) {
        const Int sum = checked_add(c.plain, c.twisted);
        return sum % 2 == 0 ? sum / 2 : -1;
    }

    // Quotient count against the family formula, with the two underlying counts as breakdown.
    VerifyReport quotient_family_report(const FamilyId& f, ModelKey m) {
        const auto& c = twisted(m);
        auto r = family_report(f, kTwistedStrategy, halved(c));
        append_projection_checks(r, m, c);
        return r;
    }

    VerifyReport verify_model(ModelKey m) {
        const auto& c = twisted(m);
        const auto expected = model_expected(m, n_);
        auto r = make(std::string(kTwistedPrefix) + std::string(model_name(m)) + ":quotient", kTwistedStrategy,
                      expected.quotient().eval(p_), halved(c));
        append_projection_checks(r, m, c);
        return r;
    }

    void append_projection_checks(VerifyReport& r, ModelKey m, const TwistedCounts& c) const {
        const auto expected = model_expected(m, n_);
        const std::string base = std::string(kTwistedPrefix) + std::string(model_name(m));
        r.breakdown.push_back(make(base + ":plain", kTwistedStrategy, expected.plain().eval(p_), c.plain));
        r.breakdown.push_back(make(base + ":twisted", kTwistedStrategy, expected.twisted().eval(p_), c.twisted));
    }

    VerifyReport verify_sl_gl() {
        const Int gl = count_rep_gl2(n_, p_, Strategy::class_based, jobs_);
        auto r = make(std::string(kSlGlToken), "mu2_twisted", gl, count_sl_gl_quotient(n_, p_, jobs_));
        r.breakdown.push_back(family_report(FamilyId::of(FamilyTag::rep_gl2_total), "class_based", gl));
        return r;
    }

    static constexpr std::string_view kTwistedStrategy = "twisted_frobenius";
    static constexpr std::string_view kEnumerationStrategy = "enumeration";

    Int n_, p_;
    Strategy strategy_;
    unsigned jobs_;
    std::optional<StratumCounts> gl2_strata_;
    std::optional<LociCounts> gl2_loci_;
    std::optional<Agl1Counts> agl1_;
    std::optional<Agl2Counts> agl2_;
    std::vector<std::pair<ModelKey, TwistedCounts>> twisted_;
};

inline VerifyReport verify(const VerifyTarget& t, Int n, Int p, Strategy strategy = Strategy::class_based,
                           unsigned jobs = 0) {
    return CellVerifier(n, p, strategy, jobs).verify(t);
}

/// Report whose verdict compares the μ2²-twisted SL2 count with count_rep_gl2.
inline VerifyReport verify_sl_gl_relation(Int n, Int p, unsigned jobs = 0) {
    return verify(SlGlTarget{}, n, p, Strategy::class_based, jobs);
}

}  // namespace hopf
