#include <gtest/gtest.h>

#include <random>

#include "dualschubert/scnp.hpp"
#include "dualschubert/serialize.hpp"
#include "oracles.hpp"

using namespace dualschubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

// Exhaustive SCNP by full chain enumeration, for cross-checking the search.
bool scnp_by_enumeration(const Permutation& u, const Permutation& w) {
    const auto target = support(postnikov_stanley_chainsum(u, w));
    bool found = false;
    for_each_chain(u, w, [&](const SaturatedChain& c) {
        found = support(chain_weight(c)) == target;
        return !found;
    });
    return found;
}

}  // namespace

TEST(Scnp, Interval213To321) {
    auto v = is_scnp(P("213"), P("321"));
    ASSERT_TRUE(v.holds);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(render_chain(*v.witness), "213 <(1,3) 312 <(2,3) 321");
    EXPECT_GE(v.chains_examined, 1u);
}

TEST(Scnp, Pair1324To4231HasSnpButNotScnp) {
    EXPECT_TRUE(is_snp(postnikov_stanley_dp(P("1324"), P("4231"))));
    auto v = is_scnp(P("1324"), P("4231"));
    EXPECT_FALSE(v.holds);
    EXPECT_FALSE(v.witness);
    EXPECT_THROW(is_scnp(P("4231"), P("1324")), std::invalid_argument);
}

TEST(Scnp, WitnessCarriesFullSupport) {
    for (const auto& u : all_permutations(4))
        for (const auto& w : all_permutations(4)) {
            if (!bruhat_leq(u, w)) continue;
            auto v = is_scnp(u, w);
            if (!v.holds) continue;
            validate_chain(*v.witness);
            EXPECT_EQ(v.witness->bottom(), u);
            EXPECT_EQ(v.witness->top(), w);
            EXPECT_EQ(support(chain_weight(*v.witness)), support(postnikov_stanley_dp(u, w)));
            EXPECT_EQ(chain_support(*v.witness), support(chain_weight(*v.witness)));
        }
}

TEST(Scnp, SearchAgreesWithEnumerationOnS4) {
    for (const auto& u : all_permutations(4))
        for (const auto& w : all_permutations(4))
            if (bruhat_leq(u, w)) EXPECT_EQ(is_scnp(u, w).holds, scnp_by_enumeration(u, w)) << to_string(u) << " " << to_string(w);
}

TEST(Scnp, SearchAgreesWithEnumerationSampledOnS5) {
    std::mt19937 rng(11);
    const auto all = all_permutations(5);
    int checked = 0;
    while (checked < 150) {
        const auto& u = all[rng() % all.size()];
        const auto& w = all[rng() % all.size()];
        if (!bruhat_leq(u, w) || w.length() - u.length() > 6) continue;
        EXPECT_EQ(is_scnp(u, w).holds, scnp_by_enumeration(u, w)) << to_string(u) << " " << to_string(w);
        ++checked;
    }
}

TEST(Scnp, PatternAvoidingPairsWithoutDominantChainAtRankSix) {
    // 236145 avoids 1324 and 541632 avoids 4231, yet neither interval below
    // has a single chain carrying all 81 support points.
    for (auto [u, w] : {std::pair{"236145", "563412"}, std::pair{"214365", "541632"}}) {
        EXPECT_FALSE(contains_pattern(P(u), P("1324")) && contains_pattern(P(w), P("4231")));
        EXPECT_EQ(support(postnikov_stanley_dp(P(u), P(w))).size(), 81u);
        EXPECT_FALSE(scnp_by_enumeration(P(u), P(w))) << u << " " << w;
        EXPECT_FALSE(is_scnp(P(u), P(w)).holds);
    }
    EXPECT_FALSE(contains_pattern(P("236145"), P("1324")));
    EXPECT_FALSE(contains_pattern(P("541632"), P("4231")));
}

TEST(Scnp, ImpliesSnpOnS4) {
    for (const auto& u : all_permutations(4))
        for (const auto& w : all_permutations(4)) {
            if (!bruhat_leq(u, w)) continue;
            if (is_scnp(u, w).holds) EXPECT_TRUE(is_snp(postnikov_stanley_dp(u, w)));
        }
}

TEST(Scnp, IdentityLowerBoundAlwaysHoldsOnS5) {
    const auto id = identity(5);
    for (const auto& w : all_permutations(5)) {
        EXPECT_TRUE(is_scnp(id, w).holds) << to_string(w);
        EXPECT_EQ(chain_support(greedy_chain(id, w)), support(dual_schubert(w)));
    }
}

TEST(Sweep, PsMConvexSmallRanks) {
    auto r3 = verify_ps_mconvex(3);
    EXPECT_TRUE(r3.complete());
    EXPECT_TRUE(r3.counterexamples.empty());
    // Comparable pairs in S_3: 19.
    EXPECT_EQ(r3.checked_pairs, 19u);
    auto r4 = verify_ps_mconvex(4);
    EXPECT_TRUE(r4.counterexamples.empty());
    std::size_t pairs = 0;
    for (const auto& u : all_permutations(4))
        for (const auto& w : all_permutations(4)) pairs += bruhat_leq(u, w);
    EXPECT_EQ(r4.checked_pairs, pairs);
}

TEST(Sweep, ScnpPatternRankThreeAndFour) {
    auto r3 = verify_scnp_pattern(3);
    EXPECT_TRUE(r3.counterexamples.empty());
    EXPECT_TRUE(r3.non_scnp_pairs.empty());
    auto r4 = verify_scnp_pattern(4);
    EXPECT_TRUE(r4.counterexamples.empty());
    ASSERT_EQ(r4.non_scnp_pairs.size(), 1u);
    EXPECT_EQ(r4.non_scnp_pairs[0], std::make_pair(P("1324"), P("4231")));
}

TEST(Sweep, PaperTheoremsRankFour) {
    auto r = verify(VerifyMode::PaperTheorems, 4);
    EXPECT_EQ(r.checked_pairs, 24u);
    EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Sweep, ParallelMatchesSerial) {
    SweepOptions opts;
    opts.jobs = 3;
    auto par = verify_scnp_pattern(4, opts);
    auto ser = verify_scnp_pattern(4);
    EXPECT_EQ(par.checked_pairs, ser.checked_pairs);
    EXPECT_EQ(par.non_scnp_pairs, ser.non_scnp_pairs);
    EXPECT_EQ(par.counterexamples, ser.counterexamples);
}

TEST(Sweep, BudgetStopsAndResumeFinishes) {
    SweepOptions tight;
    tight.max_seconds = 1e-9;
    ConjectureReport r;
    r.mode = VerifyMode::ScnpPattern;
    r.n = 4;
    run_sweep(r, tight);
    EXPECT_FALSE(r.complete());
    // Round-trip through the checkpoint format, then finish.
    auto restored = report_from_json(Json::parse(report_to_json(r).dump()));
    EXPECT_EQ(restored.next_unit, r.next_unit);
    run_sweep(restored);
    EXPECT_TRUE(restored.complete());
    auto full = verify_scnp_pattern(4);
    EXPECT_EQ(restored.checked_pairs, full.checked_pairs);
    EXPECT_EQ(restored.non_scnp_pairs, full.non_scnp_pairs);
    EXPECT_EQ(restored.counterexamples, full.counterexamples);
}

TEST(Sweep, RejectsTinyRank) { EXPECT_THROW(verify_ps_mconvex(1), std::invalid_argument); }

TEST(Sweep, ModeNames) {
    for (auto m : {VerifyMode::PsMConvex, VerifyMode::ScnpPattern, VerifyMode::PaperTheorems})
        EXPECT_EQ(parse_verify_mode(to_string(m)), m);
    EXPECT_THROW(parse_verify_mode("nope"), std::invalid_argument);
}
