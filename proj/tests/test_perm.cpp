#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dualschubert/perm.hpp"
#include "oracles.hpp"

using namespace dualschubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<InversionPair> pairs(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<InversionPair> out;
    for (auto [a, b] : xs) out.push_back({a, b});
    return out;
}

}  // namespace

TEST(Perm, IdentityBasics) {
    EXPECT_EQ(to_string(identity(3)), "123");
    EXPECT_EQ(identity(6).length(), 0);
    EXPECT_TRUE(inversions(identity(4)).empty());
    EXPECT_THROW(identity(0), std::invalid_argument);
}

TEST(Perm, RejectsNonBijections) {
    EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({1, 4, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST(Perm, InversionsOfTilingFixtures) {
    EXPECT_EQ(inversions(P("4213")), pairs({{1, 2}, {1, 3}, {1, 4}, {2, 3}}));
    EXPECT_EQ(inversions(P("253641")), pairs({{1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}));
    EXPECT_TRUE(inversions(P("123")).empty());
}

TEST(Perm, LengthEqualsInversionCountOnS5) {
    for (const auto& w : all_permutations(5)) {
        EXPECT_EQ(w.length(), static_cast<int>(inversions(w).size()));
        EXPECT_EQ(w.length(), oracle::inversion_count(w.word()));
    }
}

TEST(Perm, ApplyTransposition) {
    EXPECT_EQ(apply_t(P("123"), 1, 2), P("213"));
    EXPECT_EQ(apply_t(P("132"), 1, 3), P("231"));
    EXPECT_THROW(apply_t(P("123"), 2, 2), std::invalid_argument);
    EXPECT_THROW(apply_t(P("123"), 2, 1), std::invalid_argument);
    EXPECT_THROW(apply_t(P("123"), 0, 2), std::invalid_argument);
    EXPECT_THROW(apply_t(P("123"), 1, 4), std::invalid_argument);
}

TEST(Perm, ApplyTranspositionIsInvolutive) {
    for (const auto& w : all_permutations(4))
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b) EXPECT_EQ(apply_t(apply_t(w, a, b), a, b), w);
}

TEST(Perm, CoversInS3) {
    auto up = up_covers(P("123"));
    ASSERT_EQ(up.size(), 2u);
    EXPECT_EQ(up[0], (Cover{P("213"), {1, 2}}));
    EXPECT_EQ(up[1], (Cover{P("132"), {2, 3}}));
    EXPECT_TRUE(up_covers(P("321")).empty());
    auto down = down_covers(P("321"));
    ASSERT_EQ(down.size(), 2u);
    EXPECT_EQ(down[0], (Cover{P("231"), {1, 2}}));
    EXPECT_EQ(down[1], (Cover{P("312"), {2, 3}}));
}

TEST(Perm, UpAndDownCoversAreConverse) {
    for (const auto& w : all_permutations(5)) {
        for (const auto& c : up_covers(w)) {
            EXPECT_EQ(c.perm.length(), w.length() + 1);
            auto back = down_covers(c.perm);
            EXPECT_NE(std::find(back.begin(), back.end(), Cover{w, c.label}), back.end());
        }
        for (const auto& c : down_covers(w)) {
            auto fwd = up_covers(c.perm);
            EXPECT_NE(std::find(fwd.begin(), fwd.end(), Cover{w, c.label}), fwd.end());
        }
    }
}

TEST(Perm, CoversMatchLengthDefinition) {
    // A transposition step is a cover exactly when the length rises by one.
    for (const auto& w : all_permutations(5)) {
        std::set<InversionPair> expected;
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b)
                if (apply_t(w, a, b).length() == w.length() + 1) expected.insert({a, b});
        std::set<InversionPair> got;
        for (const auto& c : up_covers(w)) got.insert(c.label);
        EXPECT_EQ(got, expected) << to_string(w);
    }
}

TEST(Perm, BruhatExamples) {
    EXPECT_TRUE(bruhat_leq(P("213"), P("321")));
    EXPECT_FALSE(bruhat_leq(P("321"), P("213")));
    EXPECT_THROW(bruhat_leq(P("12"), P("123")), std::invalid_argument);
    for (const auto& w : all_permutations(4)) EXPECT_TRUE(bruhat_leq(w, w));
}

TEST(Perm, BruhatMatchesCoverClosureOnS4) {
    const auto rel = oracle::cover_closure(4);
    for (const auto& u : all_permutations(4))
        for (const auto& w : all_permutations(4))
            EXPECT_EQ(bruhat_leq(u, w), rel.count({u.word(), w.word()}) > 0) << to_string(u) << " " << to_string(w);
}

TEST(Perm, BruhatOrderAxiomsOnS4) {
    const auto all = all_permutations(4);
    for (const auto& u : all)
        for (const auto& v : all) {
            if (bruhat_leq(u, v)) {
                EXPECT_LE(u.length(), v.length());
                if (bruhat_leq(v, u)) EXPECT_EQ(u, v);
            }
            for (const auto& w : all)
                if (bruhat_leq(u, v) && bruhat_leq(v, w)) EXPECT_TRUE(bruhat_leq(u, w));
        }
}

TEST(Perm, PatternContainment) {
    EXPECT_FALSE(contains_pattern(P("4213"), P("1324")));
    EXPECT_TRUE(contains_pattern(P("1324"), P("1324")));
    EXPECT_TRUE(contains_pattern(P("4213"), P("1")));
    EXPECT_FALSE(contains_pattern(P("25314"), P("1324")));
    EXPECT_TRUE(contains_pattern(P("21435"), P("1324")));
    EXPECT_TRUE(contains_pattern(P("52341"), P("4231")));
    EXPECT_THROW(contains_pattern(P("12"), P("123")), std::invalid_argument);
}

TEST(Perm, PatternContainmentAgreesWithSubsetScan) {
    const auto pattern = P("1324");
    for (const auto& w : all_permutations(6)) {
        bool expected = false;
        const auto& x = w.word();
        for (int i = 0; i < 6 && !expected; ++i)
            for (int j = i + 1; j < 6 && !expected; ++j)
                for (int k = j + 1; k < 6 && !expected; ++k)
                    for (int l = k + 1; l < 6 && !expected; ++l)
                        expected = x[i] < x[k] && x[k] < x[j] && x[j] < x[l];
        EXPECT_EQ(contains_pattern(w, pattern), expected) << to_string(w);
    }
}

TEST(Perm, ParseAndPrint) {
    EXPECT_EQ(parse_permutation("4213"), Permutation({4, 2, 1, 3}));
    EXPECT_EQ(parse_permutation("[4,2,1,3]"), Permutation({4, 2, 1, 3}));
    EXPECT_EQ(parse_permutation("4, 2, 1, 3"), Permutation({4, 2, 1, 3}));
    EXPECT_EQ(to_string(Permutation({4, 2, 1, 3})), "4213");
    EXPECT_EQ(to_comma_string(Permutation({4, 2, 1, 3})), "[4,2,1,3]");
    auto big = parse_permutation("[10,1,2,3,4,5,6,7,8,9]");
    EXPECT_EQ(big.rank(), 10);
    EXPECT_EQ(to_string(big), "[10,1,2,3,4,5,6,7,8,9]");
    EXPECT_THROW(parse_permutation("42a3"), std::invalid_argument);
    EXPECT_THROW(parse_permutation("4203"), std::invalid_argument);
    EXPECT_THROW(parse_permutation("[4,2,,1]"), std::invalid_argument);
    EXPECT_THROW(parse_permutation("[4,2,1"), std::invalid_argument);
    EXPECT_THROW(parse_permutation("422"), std::invalid_argument);
}

TEST(Perm, ParsePrintRoundTrip) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        auto word = identity(n).word();
        std::shuffle(word.begin(), word.end(), rng);
        Permutation w(word);
        EXPECT_EQ(parse_permutation(to_string(w)), w);
        EXPECT_EQ(parse_permutation(to_comma_string(w)), w);
    }
}
