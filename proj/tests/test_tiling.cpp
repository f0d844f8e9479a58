#include <gtest/gtest.h>

#include "dualschubert/polytope.hpp"
#include "dualschubert/tiling.hpp"
#include "oracles.hpp"

using namespace dualschubert;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<oracle::Box> boxes(const RectTiling& t) {
    std::vector<oracle::Box> out;
    for (const auto& r : t.rects) out.push_back({r.top, r.left, r.bottom, r.right});
    std::sort(out.begin(), out.end());
    return out;
}

// The five tilings drawn for w = 4213, rectangles listed by corner 1..3.
const std::vector<std::vector<Rect>> kDrawn4213 = {
    {{1, 1, 1, 3}, {2, 1, 2, 2}, {3, 1, 3, 1}},
    {{1, 3, 1, 3}, {1, 1, 2, 2}, {3, 1, 3, 1}},
    {{1, 1, 1, 3}, {2, 2, 2, 2}, {2, 1, 3, 1}},
    {{1, 3, 1, 3}, {1, 2, 2, 2}, {1, 1, 3, 1}},
    {{1, 2, 1, 3}, {2, 2, 2, 2}, {1, 1, 3, 1}},
};
const std::vector<ExponentVector> kDrawn4213Sums = {{3, 1, 0}, {1, 3, 0}, {3, 1, 0}, {1, 2, 1}, {2, 1, 1}};

}  // namespace

TEST(Diagram, LabelsAndFill) {
    StaircaseDiagram d(6);
    EXPECT_EQ(d.rows(), 5);
    EXPECT_EQ(d.label(1, 1), (InversionPair{1, 6}));
    EXPECT_EQ(d.label(1, 5), (InversionPair{1, 2}));
    EXPECT_EQ(d.label(5, 1), (InversionPair{5, 6}));
    EXPECT_THROW(d.label(2, 5), std::out_of_range);
    EXPECT_THROW(StaircaseDiagram(1), std::invalid_argument);
}

TEST(Diagram, Fill253641) {
    // Fixture w = 253641; it also circulates as 254361, whose inversions do not match this fill.
    const std::vector<std::vector<int>> expected = {{1, 0, 0, 0, 0}, {1, 1, 0, 1}, {1, 0, 0}, {1, 1}, {1}};
    const auto d = build_diagram(P("253641"));
    EXPECT_EQ(d.fills(), expected);
    EXPECT_NE(build_diagram(P("254361")).fills(), expected);
    int ones = 0;
    for (const auto& row : d.fills())
        for (int v : row) ones += v;
    EXPECT_EQ(ones, P("253641").length());
}

TEST(Diagram, Fill4213AndIdentity) {
    EXPECT_EQ(build_diagram(P("4213")).fills(), (std::vector<std::vector<int>>{{1, 1, 1}, {0, 1}, {0}}));
    const auto zero = build_diagram(identity(5));
    for (const auto& row : zero.fills())
        for (int v : row) EXPECT_EQ(v, 0);
    EXPECT_THROW(build_diagram(identity(1)), std::invalid_argument);
}

TEST(Tilings, Counts) {
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(enumerate_tilings(n).size(), catalan[n - 1]) << n;
    EXPECT_THROW(enumerate_tilings(1), std::invalid_argument);
}

TEST(Tilings, MatchBruteForcePartitions) {
    for (int n = 2; n <= 6; ++n) {
        std::set<std::vector<oracle::Box>> got;
        for (const auto& t : enumerate_tilings(n)) {
            validate_tiling(t);
            EXPECT_TRUE(got.insert(boxes(t)).second) << "duplicate tiling";
        }
        const auto brute = oracle::minimal_staircase_partitions(n);
        EXPECT_EQ(got, std::set<std::vector<oracle::Box>>(brute.begin(), brute.end())) << n;
    }
}

TEST(Tilings, ValidateRejectsBadTilings) {
    RectTiling overlap{3, {{1, 1, 1, 2}, {1, 1, 2, 1}}};
    EXPECT_THROW(validate_tiling(overlap), InvariantError);
    RectTiling unanchored{3, {{1, 1, 1, 1}, {2, 1, 2, 1}}};
    EXPECT_THROW(validate_tiling(unanchored), InvariantError);
    RectTiling gap{3, {{1, 2, 1, 2}, {2, 1, 2, 1}}};
    EXPECT_THROW(validate_tiling(gap), InvariantError);
}

TEST(Tilings, DrawnTilingsOf4213) {
    const auto d = build_diagram(P("4213"));
    const auto all = enumerate_tilings(4);
    ASSERT_EQ(all.size(), 5u);
    std::multiset<ExponentVector> seen;
    for (std::size_t i = 0; i < kDrawn4213.size(); ++i) {
        RectTiling t{4, kDrawn4213[i]};
        validate_tiling(t);
        EXPECT_NE(std::find(all.begin(), all.end(), t), all.end()) << "drawn tiling " << i + 1 << " not enumerated";
        EXPECT_EQ(tiling_vertex(d, t), kDrawn4213Sums[i]);
    }
    for (const auto& t : all) seen.insert(tiling_vertex(d, t));
    EXPECT_EQ(seen, std::multiset<ExponentVector>(kDrawn4213Sums.begin(), kDrawn4213Sums.end()));
}

TEST(Tilings, DrawnTilingOf253641) {
    RectTiling t{6, {{1, 3, 1, 5}, {2, 4, 2, 4}, {2, 3, 3, 3}, {1, 1, 4, 2}, {5, 1, 5, 1}}};
    validate_tiling(t);
    EXPECT_EQ(tiling_vertex(build_diagram(P("253641")), t), (ExponentVector{0, 1, 0, 6, 1}));
    const auto all = enumerate_tilings(6);
    EXPECT_NE(std::find(all.begin(), all.end(), t), all.end());
}

TEST(Tilings, ZeroDiagramGivesZeroVertex) {
    const auto d = build_diagram(identity(5));
    for (const auto& t : enumerate_tilings(5)) EXPECT_EQ(tiling_vertex(d, t), (ExponentVector{0, 0, 0, 0}));
    EXPECT_THROW(tiling_vertex(d, enumerate_tilings(4).front()), std::invalid_argument);
}

TEST(Vertices, ViaTilings) {
    EXPECT_EQ(vertices_via_tilings(P("4213")), (LatticePointSet{{3, 1, 0}, {1, 3, 0}, {1, 2, 1}, {2, 1, 1}}));
    EXPECT_EQ(vertices_via_tilings(identity(4)), (LatticePointSet{{0, 0, 0}}));
    EXPECT_EQ(vertices_via_tilings(identity(1)), (LatticePointSet{ExponentVector{}}));
}

TEST(Vertices, TilingsAgreeWithBothOraclesOnS5) {
    for (const auto& w : all_permutations(5)) {
        const auto v = vertices_via_tilings(w);
        EXPECT_EQ(v, newton_vertices_coeff1(w)) << to_string(w);
        EXPECT_EQ(v, hull_vertices(support(global_weight(w)))) << to_string(w);
    }
}

TEST(Vertices, TilingVerticesLieInThePolytope) {
    for (const auto& w : all_permutations(5)) {
        const auto gp = gp_from_inversions(w);
        for (const auto& v : tiling_vertex_list(w)) {
            EXPECT_TRUE(gp_contains(gp, v));
            EXPECT_EQ(degree(v), w.length());
        }
    }
}

TEST(Render, AsciiOnly) {
    const auto d = build_diagram(P("4213"));
    const auto t = enumerate_tilings(4).front();
    const auto text = render_diagram(d) + render_tiling(d, t);
    for (char c : text) EXPECT_TRUE(c == '\n' || (c >= 32 && c < 127));
    EXPECT_EQ(render_diagram(d), "(1,4):1 (1,3):1 (1,2):1\n(2,4):0 (2,3):1\n(3,4):0\n");
}
