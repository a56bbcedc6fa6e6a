#include <gtest/gtest.h>

#include "hopf/report_json.hpp"
#include "hopf/verify.hpp"

namespace {

using hopf::FamilyId;
using hopf::FamilyTag;
using hopf::Int;
using hopf::MatP;
using hopf::ModelKey;
using hopf::PrimeField;
using hopf::Strategy;
using hopf::Stratum2;

// Admissible (n, p) with p small enough for every strategy.
std::vector<std::pair<Int, Int>> small_cells() {
    std::vector<std::pair<Int, Int>> out;
    for (Int p : {3, 5, 7}) {
        for (Int n = 1; n < p; ++n) {
            if (hopf::is_admissible(n, p)) out.emplace_back(n, p);
        }
    }
    return out;
}

TEST(Admissibility, Messages) {
    try {
        hopf::require_admissible(3, 5);
        FAIL() << "expected InadmissibleError";
    } catch (const hopf::InadmissibleError& e) {
        EXPECT_STREQ(e.what(), "p=5 inadmissible for n=3 (5 ≢ 1 mod 3)");
    }
    EXPECT_THROW(hopf::require_admissible(1, 9), hopf::InadmissibleError);
    EXPECT_THROW(hopf::require_admissible(1, 2), hopf::InadmissibleError);
    EXPECT_THROW(hopf::count_rep_gl2(2, 2, Strategy::naive), hopf::InadmissibleError);
    EXPECT_THROW(hopf::count_rep_gl2(3, 5, Strategy::class_based), std::invalid_argument);
    EXPECT_THROW(hopf::count_rep_gl2(1, 11, Strategy::naive), hopf::InadmissibleError);
    EXPECT_THROW(hopf::count_rep_agl1(4, 7), hopf::InadmissibleError);
}

TEST(Gl2Counts, Anchors) {
    EXPECT_EQ(hopf::count_rep_gl2(1, 2, Strategy::naive), 18);
    EXPECT_EQ(hopf::count_rep_gl2(1, 3, Strategy::naive), 384);
    EXPECT_EQ(hopf::count_rep_gl2(1, 3, Strategy::class_based), 384);
    EXPECT_EQ(hopf::count_rep_gl2(2, 3, Strategy::naive), 1152);
    EXPECT_EQ(hopf::count_rep_gl2(2, 3, Strategy::class_based), 1152);
}

TEST(Gl2Counts, StrataAnchors) {
    const auto s23 = hopf::count_rep_gl2_strata(2, 3);
    EXPECT_EQ(s23[static_cast<std::size_t>(Stratum2::xi2_xi0)], 864);
    EXPECT_EQ(hopf::total_of(s23), 1152);
    EXPECT_EQ(hopf::count_rep_gl2_strata(1, 3)[static_cast<std::size_t>(Stratum2::xi2_xi0)], 0);
    for (auto [n, p] : small_cells()) {
        EXPECT_EQ(hopf::count_rep_gl2_strata(n, p)[0], (p - 1) * hopf::gl2_order(p)) << n << "," << p;
    }
}

TEST(Gl2Counts, Loci) {
    const auto l23 = hopf::count_rep_gl2_loci(2, 3);
    EXPECT_EQ(l23.irreducible, 576);
    EXPECT_EQ(l23.reducible + l23.irreducible, 1152);
    const auto l13 = hopf::count_rep_gl2_loci(1, 3);
    EXPECT_EQ(l13.reducible, 384);
    EXPECT_EQ(l13.irreducible, 0);
}

TEST(ConjugacyClasses, PartitionTheGroup) {
    for (Int p : {3, 5, 7, 11, 13}) {
        const PrimeField f(p);
        const auto classes = hopf::conjugacy_classes(f);
        EXPECT_EQ(static_cast<Int>(classes.size()), p * p - 1);
        Int total = 0;
        for (const auto& c : classes) {
            total += c.size;
            EXPECT_EQ(c.size * hopf::centralizer_order(f, c.rep), hopf::gl2_order(p));
        }
        EXPECT_EQ(total, hopf::gl2_order(p));
    }
}

TEST(ConjugacyClasses, CentralizerOrdersByEnumeration) {
    for (Int p : {3, 5}) {
        const PrimeField f(p);
        const auto G = hopf::general_linear_group(f);
        for (const auto& m : G) {
            Int c = 0;
            for (const auto& x : G) c += hopf::commutes(f, m, x) ? 1 : 0;
            ASSERT_EQ(c, hopf::centralizer_order(f, m));
        }
    }
}

TEST(ConjugacyClasses, RepresentativesAreDistinctClasses) {
    const PrimeField f(5);
    const auto G = hopf::general_linear_group(f);
    for (const auto& c : hopf::conjugacy_classes(f)) {
        Int orbit = 0;
        for (const auto& x : G) {
            bool conj = false;
            for (const auto& g : G) {
                if (hopf::mat_mul(f, g, c.rep) == hopf::mat_mul(f, x, g)) {
                    conj = true;
                    break;
                }
            }
            orbit += conj ? 1 : 0;
        }
        EXPECT_EQ(orbit, c.size);
    }
}

TEST(Omega, Anchors) {
    EXPECT_EQ(hopf::count_omega(2), 4);
    EXPECT_EQ(hopf::count_omega(3), 21);
    EXPECT_EQ(hopf::count_omega(5), 115);
}

TEST(AglCounts, Anchors) {
    EXPECT_EQ(hopf::count_rep_agl1(2, 3).total, 30);
    EXPECT_EQ(hopf::count_rep_agl1(1, 3).total, 18);
    EXPECT_EQ(hopf::count_rep_agl(1, 2, 3), 30);
    EXPECT_EQ(hopf::count_rep_agl2(1, 3).total, 4752);
    EXPECT_EQ(hopf::count_rep_agl(2, 1, 3), 4752);
    EXPECT_THROW(hopf::count_rep_agl(3, 1, 3), std::invalid_argument);
}

// Affine maps x ↦ Ax + α, enumerated directly rather than through the fibration.
struct Affine {
    MatP a;
    hopf::Vec2<hopf::Residue> t;
};

Affine compose(const PrimeField& f, const Affine& x, const Affine& y) {
    const auto v = hopf::mat_apply(f, x.a, y.t);
    return {hopf::mat_mul(f, x.a, y.a), {f.add(v.x, x.t.x), f.add(v.y, x.t.y)}};
}

bool same(const Affine& x, const Affine& y) { return x.a == y.a && x.t == y.t; }

Int direct_agl2(Int n, Int p) {
    const PrimeField f(p);
    std::vector<Affine> group;
    for (const auto& a : hopf::general_linear_group(f))
        for (auto tx : f.elements())
            for (auto ty : f.elements()) group.push_back({a, {tx, ty}});
    Int count = 0;
    for (const auto& x : group) {
        Affine xn = x;
        for (Int k = 1; k < n; ++k) xn = compose(f, xn, x);
        for (const auto& y : group) count += same(compose(f, xn, y), compose(f, y, xn)) ? 1 : 0;
    }
    return count;
}

Int direct_agl1(Int n, Int p) {
    const PrimeField f(p);
    Int count = 0;
    for (std::uint32_t a = 1; a < f.characteristic(); ++a)
        for (auto s : f.elements())
            for (std::uint32_t b = 1; b < f.characteristic(); ++b)
                for (auto t : f.elements()) {
                    // x^n for x = (a, s): (a^n, s·Φ_n(a))
                    hopf::Residue an = f.one(), phi = f.zero();
                    for (Int k = 0; k < n; ++k) {
                        phi = f.add(phi, an);
                        an = f.mul(an, {a});
                    }
                    const auto sn = f.mul(s, phi);
                    // (an, sn)∘(b, t) = (an b, an t + sn); (b, t)∘(an, sn) = (b an, b sn + t)
                    if (f.add(f.mul(an, t), sn) == f.add(f.mul({b}, sn), t)) ++count;
                }
    return count;
}

TEST(AglCounts, MatchDirectEnumeration) {
    EXPECT_EQ(hopf::count_rep_agl2(1, 3).total, direct_agl2(1, 3));
    EXPECT_EQ(hopf::count_rep_agl2(2, 3).total, direct_agl2(2, 3));
    for (auto [n, p] : small_cells()) EXPECT_EQ(hopf::count_rep_agl1(n, p).total, direct_agl1(n, p)) << n << "," << p;
}

TEST(AglCounts, BinsSumToTotals) {
    for (auto [n, p] : small_cells()) {
        const auto a1 = hopf::count_rep_agl1(n, p);
        EXPECT_EQ(a1.sub[0] + a1.sub[1] + a1.sub[2], a1.total);
        const auto a2 = hopf::count_rep_agl2(n, p);
        EXPECT_EQ(hopf::total_of(a2.strata), a2.total);
        for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(a2.sub[s][0] + a2.sub[s][1] + a2.sub[s][2], a2.strata[s]);
    }
}

TEST(Strategies, AgreeWhereBothRun) {
    for (auto [n, p] : small_cells()) {
        EXPECT_EQ(hopf::count_rep_gl2(n, p, Strategy::naive), hopf::count_rep_gl2(n, p, Strategy::class_based));
        EXPECT_EQ(hopf::count_rep_gl2_strata(n, p, Strategy::naive),
                  hopf::count_rep_gl2_strata(n, p, Strategy::class_based));
        const auto ln = hopf::count_rep_gl2_loci(n, p, Strategy::naive);
        const auto lc = hopf::count_rep_gl2_loci(n, p, Strategy::class_based);
        EXPECT_EQ(ln.reducible, lc.reducible);
        EXPECT_EQ(ln.irreducible, lc.irreducible);
        const auto an = hopf::count_rep_agl2(n, p, Strategy::naive);
        const auto ac = hopf::count_rep_agl2(n, p, Strategy::class_based);
        EXPECT_EQ(an.total, ac.total);
        EXPECT_EQ(an.strata, ac.strata);
        EXPECT_EQ(an.sub, ac.sub);
    }
}

TEST(Strategies, WorkerCountDoesNotChangeResults) {
    for (auto [n, p] : std::vector<std::pair<Int, Int>>{{2, 5}, {3, 7}, {4, 13}}) {
        EXPECT_EQ(hopf::count_rep_gl2_strata(n, p, Strategy::class_based, 1),
                  hopf::count_rep_gl2_strata(n, p, Strategy::class_based, 4));
        const auto a1 = hopf::count_rep_agl2(n, p, Strategy::class_based, 1);
        const auto a4 = hopf::count_rep_agl2(n, p, Strategy::class_based, 4);
        EXPECT_EQ(a1.sub, a4.sub);
        const auto l1 = hopf::count_rep_gl2_loci(n, p, Strategy::class_based, 1);
        const auto l4 = hopf::count_rep_gl2_loci(n, p, Strategy::class_based, 3);
        EXPECT_EQ(l1.irreducible, l4.irreducible);
    }
    EXPECT_EQ(hopf::count_sl_gl_quotient(2, 5, 1), hopf::count_sl_gl_quotient(2, 5, 4));
}

TEST(ParallelReduce, SlicesFoldInOrder) {
    for (unsigned jobs : {1u, 2u, 3u, 7u, 50u}) {
        const auto s = hopf::parallel_reduce(
            std::size_t{20}, jobs, std::string{},
            [](std::size_t lo, std::size_t hi) {
                std::string out;
                for (std::size_t i = lo; i < hi; ++i) out += static_cast<char>('a' + i);
                return out;
            },
            [](std::string a, const std::string& b) { return a + b; });
        EXPECT_EQ(s, "abcdefghijklmnopqrst");
    }
    EXPECT_THROW(hopf::parallel_reduce(
                     std::size_t{8}, 4, 0,
                     [](std::size_t lo, std::size_t) -> int {
                         if (lo > 0) throw std::runtime_error("boom");
                         return 1;
                     },
                     [](int a, int b) { return a + b; }),
                 std::runtime_error);
}

// ---- twisted counts ------------------------------------------------------------

TEST(Twisted, Anchors) {
    const auto t = hopf::twisted_count(ModelKey::torus2_swap, 1, 3);
    EXPECT_EQ(t.plain, 4);
    EXPECT_EQ(t.twisted, 8);
    EXPECT_EQ(hopf::count_quotient(ModelKey::torus2_swap, 1, 3), 6);
    const auto pp = hopf::twisted_count(ModelKey::pgl2_mod_diag_as_point_pairs, 1, 3);
    EXPECT_EQ(pp.plain, 12);
    EXPECT_EQ(pp.twisted, 6);
    const auto e = hopf::twisted_count(ModelKey::E_sigma1_sigma0, 2, 3);
    EXPECT_EQ(e.plain, 2);
    EXPECT_EQ(e.twisted, 2);
    const auto red = hopf::twisted_count(ModelKey::charred_model, 1, 3);
    EXPECT_EQ(red.plain, 16);
    EXPECT_EQ(red.twisted, 64);
    EXPECT_EQ(hopf::count_quotient(ModelKey::charred_model, 1, 3), 40);
    const auto irr = hopf::twisted_count(ModelKey::charirr_model, 2, 3);
    EXPECT_EQ(irr.plain, 28);
    EXPECT_EQ(irr.twisted, 20);
    EXPECT_EQ(hopf::count_quotient(ModelKey::charirr_model, 2, 3), 24);
}

TEST(Twisted, ModelsMatchEquivariantPolynomials) {
    for (Int p : {3, 5, 7}) {
        for (Int n = 1; n < p; ++n) {
            if (!hopf::is_admissible(n, p)) continue;
            for (auto k : hopf::kAllModelKeys) {
                const auto c = hopf::twisted_count(k, n, p);
                const auto e = hopf::model_expected(k, n);
                EXPECT_EQ(c.plain, e.plain().eval(p)) << hopf::model_name(k) << " n=" << n << " p=" << p;
                EXPECT_EQ(c.twisted, e.twisted().eval(p)) << hopf::model_name(k) << " n=" << n << " p=" << p;
                EXPECT_EQ((c.plain + c.twisted) % 2, 0) << hopf::model_name(k);
                EXPECT_EQ(hopf::count_quotient(k, n, p), e.quotient().eval(p));
            }
        }
    }
}

TEST(Twisted, NameRoundTripAndErrors) {
    for (auto k : hopf::kAllModelKeys) EXPECT_EQ(hopf::parse_model(hopf::model_name(k)), k);
    EXPECT_THROW(hopf::parse_model("torus3"), std::invalid_argument);
    EXPECT_THROW(hopf::twisted_count(ModelKey::punctured_mu, 3, 5), hopf::InadmissibleError);
    EXPECT_THROW(hopf::twisted_count(ModelKey::torus2_swap, 1, 2), hopf::InadmissibleError);
    EXPECT_NO_THROW(hopf::twisted_count(ModelKey::torus2_swap, 3, 5));
}

TEST(SlGl, RelationHolds) {
    EXPECT_EQ(hopf::count_sl_gl_quotient(1, 3), 384);
    EXPECT_EQ(hopf::count_sl_gl_quotient(2, 3), 1152);
    EXPECT_EQ(hopf::count_sl_gl_quotient(2, 5),
              hopf::motive_formula(FamilyId::of(FamilyTag::rep_gl2_total), 2).eval(5));
    for (auto [n, p] : std::vector<std::pair<Int, Int>>{{1, 3}, {2, 3}, {1, 5}, {2, 5}, {4, 5}}) {
        const auto r = hopf::verify_sl_gl_relation(n, p);
        EXPECT_TRUE(r.match()) << n << "," << p;
        EXPECT_EQ(r.counted_value, hopf::count_rep_gl2(n, p, Strategy::class_based));
    }
    EXPECT_THROW(hopf::count_sl_gl_quotient(1, 7), hopf::InadmissibleError);
    EXPECT_THROW(hopf::verify_sl_gl_relation(3, 5), hopf::InadmissibleError);
}

// ---- verify ----------------------------------------------------------------------

TEST(Verify, Examples) {
    const auto irr = hopf::verify(FamilyId::of(FamilyTag::rep_gl2_irr), 2, 3);
    EXPECT_TRUE(irr.match());
    EXPECT_EQ(irr.counted_value, 576);
    const auto red = hopf::verify(FamilyId::of(FamilyTag::rep_gl2_red), 1, 3);
    EXPECT_TRUE(red.match());
    EXPECT_EQ(red.counted_value, 384);
    const auto om = hopf::verify(FamilyId::of(FamilyTag::omega), 1, 5);
    EXPECT_TRUE(om.match());
    EXPECT_EQ(om.counted_value, 115);
    EXPECT_EQ(om.verdict(), "match");
}

TEST(Verify, BreakdownsCoverParts) {
    const auto gl2 = hopf::verify(FamilyId::of(FamilyTag::rep_gl2_total), 2, 5);
    ASSERT_EQ(gl2.breakdown.size(), 4u);
    Int sum = 0;
    for (const auto& b : gl2.breakdown) sum += b.counted_value;
    EXPECT_EQ(sum, gl2.counted_value);
    const auto agl2 = hopf::verify(FamilyId::of(FamilyTag::rep_agl2_total), 2, 5);
    ASSERT_EQ(agl2.breakdown.size(), 4u);
    for (const auto& s : agl2.breakdown) EXPECT_EQ(s.breakdown.size(), 3u);
    EXPECT_TRUE(agl2.all_match());
    EXPECT_EQ(hopf::verify(FamilyId::of(FamilyTag::rep_agl1_total), 2, 5).breakdown.size(), 3u);
}

TEST(Verify, EveryTargetMatchesOnSmallCells) {
    for (auto [n, p] : small_cells()) {
        hopf::CellVerifier cell(n, p, Strategy::class_based, 1);
        for (const auto& t : hopf::target_group("all")) {
            const auto r = cell.verify(t);
            EXPECT_TRUE(r.all_match()) << hopf::target_token(t) << " n=" << n << " p=" << p;
        }
        for (const auto& t : hopf::target_group("twisted")) EXPECT_TRUE(cell.verify(t).all_match());
    }
}

TEST(Verify, TargetsAndErrors) {
    EXPECT_EQ(hopf::target_token(hopf::parse_target("twisted:U_space")), "twisted:U_space");
    EXPECT_EQ(hopf::target_token(hopf::parse_target("sl_gl_relation")), "sl_gl_relation");
    EXPECT_EQ(hopf::target_group("twisted").size(), hopf::kAllModelKeys.size());
    EXPECT_EQ(hopf::target_group("all").size(), hopf::all_families().size());
    EXPECT_THROW(hopf::parse_target("twisted:nope"), std::invalid_argument);
    EXPECT_THROW(hopf::verify(FamilyId::of(FamilyTag::rep_gl2_total), 1, 11, Strategy::naive),
                 hopf::InadmissibleError);
    EXPECT_THROW(hopf::verify(FamilyId::of(FamilyTag::rep_agl1_total), 3, 5), hopf::InadmissibleError);
}

TEST(Verify, JsonRoundTrip) {
    const auto r = hopf::verify(FamilyId::of(FamilyTag::rep_agl2_total), 2, 3);
    const auto j = hopf::to_json(r);
    EXPECT_EQ(j["formula_value"].get<std::string>(), std::to_string(r.formula_value));
    EXPECT_EQ(j["verdict"], "match");
    const auto back = hopf::report_from_json(hopf::Json::parse(hopf::to_json_line(r)));
    EXPECT_EQ(hopf::to_json(back), j);
    const std::vector<std::string> keys = {"family",        "n",       "p",          "strategy", "formula_value",
                                           "counted_value", "verdict", "elapsed_ms", "breakdown"};
    std::vector<std::string> actual;
    for (const auto& [k, v] : j.items()) actual.push_back(k);
    EXPECT_EQ(actual, keys);
}

}  // namespace
