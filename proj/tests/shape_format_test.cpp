#include "gwcount/errors.hpp"
#include "gwcount/shape_format.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace gwcount {
namespace {

TEST(CanonicalForm, TreeChildrenSorted) {
    const Skeleton a{GraphKind::Tree, {0, 2, 1}, {Edge(0, 1), Edge(0, 2)}, {0, 3, 5}};
    const Skeleton b{GraphKind::Tree, {0, 1, 2}, {Edge(0, 1), Edge(0, 2)}, {0, 5, 3}};
    EXPECT_EQ(canonical_form(a), "(w0#0(w1#5)(w2#3))");
    EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(CanonicalForm, RootMatters) {
    // Same unrooted tree, different distinguished vertex.
    const Skeleton a{GraphKind::Tree, {3, 0}, {Edge(0, 1)}, {5, 3}};
    const Skeleton b{GraphKind::Tree, {0, 3}, {Edge(0, 1)}, {3, 5}};
    EXPECT_NE(canonical_form(a), canonical_form(b));
}

TEST(CanonicalForm, MarkedLabels) {
    const DistinguishedTree t{{0, 3}, {Edge(0, 1)}, {{5, 2}, {1, 3, 4, 6, 7, 8}}};
    EXPECT_EQ(canonical_form(t), "(w0[2,5](w3[1,3,4,6,7,8]))");
}

TEST(CanonicalForm, CircuitRotationAndReflection) {
    // Triangle with weights 1,2,0 in two different orientations.
    const Skeleton a{GraphKind::Circuit, {1, 2, 0}, {Edge(0, 1), Edge(1, 2), Edge(2, 0)}, {2, 3, 3}};
    const Skeleton b{GraphKind::Circuit, {0, 2, 1}, {Edge(0, 1), Edge(1, 2), Edge(2, 0)}, {3, 3, 2}};
    EXPECT_EQ(canonical_form(a), canonical_form(b));
    EXPECT_EQ(canonical_form(a), "<(w0#3)(w1#2)(w2#3)>");
}

TEST(CanonicalForm, DoubleEdgeWithHangingVertex) {
    const Skeleton omega{GraphKind::Circuit, {0, 0, 3}, {Edge(0, 1), Edge(0, 1), Edge(1, 2)}, {1, 0, 7}};
    EXPECT_EQ(canonical_form(omega), "<(w0#0(w3#7))(w0#1)>");
}

TEST(CanonicalForm, RejectsMalformedGraph) {
    const Skeleton cyclic_tree{GraphKind::Tree, {1, 1, 1}, {Edge(0, 1), Edge(1, 2), Edge(2, 0)}, {0, 0, 8}};
    EXPECT_THROW(canonical_form(cyclic_tree), DomainError);
}

TEST(ParseShape, TreeRoundTrip) {
    const ParsedShape p = parse_shape("(w0#0(w1#5)(w2#3))");
    EXPECT_EQ(p.skeleton.kind, GraphKind::Tree);
    EXPECT_EQ(p.skeleton.weights, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(p.skeleton.leg_counts, (std::vector<int>{0, 5, 3}));
    EXPECT_FALSE(p.legs.has_value());
}

TEST(ParseShape, LabelsAndCircuit) {
    const ParsedShape p = parse_shape("<(w0[1](w3[3,4,5,6,7,8]))(w0[2])>");
    EXPECT_EQ(p.skeleton.kind, GraphKind::Circuit);
    ASSERT_TRUE(p.legs.has_value());
    EXPECT_EQ((*p.legs)[1], (std::vector<int>{3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(p.skeleton.edges.size(), 3u);
    EXPECT_EQ(canonical_form(p.skeleton, *p.legs), "<(w0[1](w3[3,4,5,6,7,8]))(w0[2])>");
}

TEST(ParseShape, Errors) {
    for (const char* bad : {"", "(w1#2", "(w1)", "(x1#2)", "<(w1#2)>", "(w1#2)(w1#2)",
                            "(w1#2(w0[1]))", "(w1[1,])", "<(w1#1)(w2#2)"}) {
        EXPECT_THROW(parse_shape(bad), FormatError) << bad;
    }
}

// Applies a random vertex relabeling (fixing 0 for trees) and checks the
// canonical form is unchanged and re-canonicalizing it is idempotent.
TEST(CanonicalForm, RandomRelabelingProperty) {
    std::mt19937 rng(11);
    const std::vector<std::string> shapes = {
        "(w0#1(w1#2(w0#3))(w2#2))",
        "(w2#0(w0#3)(w0#3)(w1#2))",
        "<(w0#1)(w1#2)(w0#1(w2#4))>",
        "<(w1#1(w0#2)(w0#2))(w1#3)(w1#0)(w0#2)>",
        "<(w0[1,2](w3[3,4,5,6,7]))(w0[8])>",
        "(w0[1,2](w1[3,4])(w2[5,6,7,8]))",
    };
    for (const auto& text : shapes) {
        const ParsedShape p = parse_shape(text);
        const Skeleton& s = p.skeleton;
        const int n = s.vertex_count();
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin() + (s.kind == GraphKind::Tree ? 1 : 0), perm.end(), rng);
            Skeleton t = s;
            LegLabels legs(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                t.weights[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = s.weights[static_cast<std::size_t>(v)];
                t.leg_counts[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = s.leg_counts[static_cast<std::size_t>(v)];
                if (p.legs) {
                    legs[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = (*p.legs)[static_cast<std::size_t>(v)];
                }
            }
            for (auto& e : t.edges) {
                e = Edge(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]);
            }
            std::shuffle(t.edges.begin(), t.edges.end(), rng);
            const std::string original = p.legs ? canonical_form(s, *p.legs) : canonical_form(s);
            const std::string relabeled = p.legs ? canonical_form(t, legs) : canonical_form(t);
            EXPECT_EQ(original, relabeled) << text;
            const ParsedShape again = parse_shape(original);
            EXPECT_EQ(again.legs ? canonical_form(again.skeleton, *again.legs) : canonical_form(again.skeleton),
                      original);
        }
    }
}

TEST(CanonicalForm, NonIsomorphicGraphsDiffer) {
    // Same multiset of vertex terms, different circuit order: 1,1,2,2 vs 1,2,1,2.
    const Skeleton a{GraphKind::Circuit, {1, 1, 2, 2},
                     {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 0)}, {2, 2, 2, 2}};
    const Skeleton b{GraphKind::Circuit, {1, 2, 1, 2},
                     {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 0)}, {2, 2, 2, 2}};
    EXPECT_NE(canonical_form(a), canonical_form(b));
}

}  // namespace
}  // namespace gwcount
