#include <gtest/gtest.h>

#include "mngraph/catalog.hpp"
#include "mngraph/constructions.hpp"
#include "mngraph/random.hpp"
#include "mngraph/seeing.hpp"
#include "oracles.hpp"

using namespace mngraph;

namespace {

MixedGraph two_path(int m, int n, SignedLabel toward_u, SignedLabel toward_v) {
    // u = 0, w = 1, v = 2; labels read from w
    MixedGraph g(m, n, 3);
    g.add_adjacency(1, 0, toward_u);
    g.add_adjacency(1, 2, toward_v);
    return g;
}

}  // namespace

TEST(SpecialTwoPath, OppositeArcsAtMidpoint) {
    const MixedGraph g = two_path(1, 0, SignedLabel(1), SignedLabel(-1));
    EXPECT_TRUE(is_special_two_path(g, 0, 1, 2));
    EXPECT_TRUE(sees(g, 0, 2));
}

TEST(SpecialTwoPath, EqualEdgeLabels) {
    const MixedGraph g = two_path(0, 2, SignedLabel(2), SignedLabel(2));
    EXPECT_FALSE(is_special_two_path(g, 0, 1, 2));
    EXPECT_FALSE(sees(g, 0, 2));
}

TEST(SpecialTwoPath, LabeledFiveCycle) {
    const MixedGraph c = build_c5_02();
    EXPECT_TRUE(is_special_two_path(c, 0, 1, 2));
    EXPECT_FALSE(is_special_two_path(c, 4, 0, 1));
    EXPECT_THROW(is_special_two_path(c, 0, 0, 1), InputError);
    EXPECT_THROW(sees(c, 2, 2), InputError);
}

TEST(Sees, AdjacentPairs) {
    const MixedGraph g = build_petersen_11();
    for (Vertex u = 0; u < 10; ++u) {
        for (const Neighbor& nb : g.neighbors(u)) EXPECT_TRUE(sees(g, u, nb.vertex));
    }
}

TEST(Sees, PetersenFixtureSeesEverything) {
    const MixedGraph g = build_petersen_11();
    for (Vertex u = 0; u < 10; ++u) {
        for (Vertex v = u + 1; v < 10; ++v) EXPECT_TRUE(sees(g, u, v)) << u << " " << v;
    }
}

TEST(SeeingGraph, SingleEdge) {
    MixedGraph g(0, 2, 2);
    g.add_edge(0, 1, 1);
    EXPECT_EQ(seeing_graph(g).graph().edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(SeeingGraph, LabeledFiveCycleChords) {
    const auto g2 = seeing_graph(build_c5_02()).graph();
    // Independent expectation: every pair tested from the definition.
    std::vector<Edge> expected;
    const MixedGraph c = build_c5_02();
    for (int u = 0; u < 5; ++u) {
        for (int v = u + 1; v < 5; ++v) {
            if (oracle::sees(c, u, v)) expected.push_back({u, v});
        }
    }
    EXPECT_EQ(g2.edges(), expected);
    EXPECT_EQ(g2.edge_count(), 9);
    // v1..v5 are ids 0..4: chords v1v3, v2v4, v1v4, v3v5 present; v2v5 absent
    EXPECT_TRUE(g2.adjacent(0, 2));
    EXPECT_TRUE(g2.adjacent(1, 3));
    EXPECT_TRUE(g2.adjacent(0, 3));
    EXPECT_TRUE(g2.adjacent(2, 4));
    EXPECT_FALSE(g2.adjacent(1, 4));
}

TEST(SeeingGraph, WagnerFixtureIsComplete) {
    EXPECT_EQ(seeing_graph(build_wagner_02()).graph().edge_count(), 28);
}

TEST(SeeingGraph, MatchesDefinitionOnRandomGraphs) {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.between(1, 11);
        const MixedGraph g = random_mixed_graph(rng, random_graph(rng, n, rng.between(100, 800)), trial % 3, 1 + trial % 2);
        const auto g2 = seeing_graph(g).graph();
        const UnderlyingGraph u = underlying(g);
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                const bool expect = oracle::sees(g, a, b);
                EXPECT_EQ(g2.adjacent(a, b), expect);
                EXPECT_EQ(sees(g, a, b), expect);
                EXPECT_EQ(sees(g, b, a), expect);
                if (u.adjacent(a, b)) EXPECT_TRUE(g2.adjacent(a, b));
            }
        }
        const int delta = g.max_degree();
        EXPECT_LE(g2.max_degree(), delta * delta);
    }
}

TEST(SeeingGraph, AddingAnAdjacencyNeverRemovesSeeing) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 8;
        const UnderlyingGraph u = random_graph(rng, n, 350);
        const Labeling l = random_labeling(rng, u, 1, 1);
        const MixedGraph g = apply_labeling(u, 1, 1, l);
        std::vector<Edge> missing;
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                if (!u.adjacent(a, b)) missing.push_back({a, b});
            }
        }
        if (missing.empty()) continue;
        const Edge add = missing[rng.below(missing.size())];
        MixedGraph h = g;
        h.add_adjacency(add.u, add.v, h.alphabet().label_of_type(static_cast<int>(rng.below(3))));
        const auto before = seeing_graph(g).graph();
        const auto after = seeing_graph(h).graph();
        for (const Edge& e : before.edges()) EXPECT_TRUE(after.adjacent(e.u, e.v));
    }
}

TEST(Mergeable, ExamplesFromDefinition) {
    MixedGraph edge(0, 2, 2);
    edge.add_edge(0, 1, 1);
    EXPECT_FALSE(mergeable_oracle(edge, 0, 1));

    const MixedGraph same = two_path(0, 2, SignedLabel(2), SignedLabel(2));
    EXPECT_TRUE(mergeable_oracle(same, 0, 2));

    const MixedGraph special = two_path(1, 0, SignedLabel(1), SignedLabel(-1));
    EXPECT_FALSE(mergeable_oracle(special, 0, 2));

    EXPECT_THROW(mergeable_oracle(same, 1, 1), InputError);
    EXPECT_THROW(mergeable_oracle(build_petersen_11(), 0, 7, 9), CapacityError);
}

TEST(Mergeable, AgreesWithPartitionBruteForce) {
    Rng rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = rng.between(2, 7);
        const MixedGraph g = random_mixed_graph(rng, random_graph(rng, n, 500), 1, trial % 2 ? 1 : 0);
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) EXPECT_EQ(mergeable_oracle(g, a, b), oracle::mergeable(g, a, b));
        }
    }
}

// The central equivalence: u sees v exactly when no homomorphism merges them.
TEST(SeesMergeEquivalence, HoldsOnSmallCatalog) {
    Rng rng(1);
    long long pairs = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const UnderlyingGraph& u : enumerate_graphs(n)) {
            for (const auto [m, k] : {std::pair{1, 1}, std::pair{0, 2}, std::pair{1, 0}}) {
                for (int i = 0; i < 10; ++i) {
                    const MixedGraph g = random_mixed_graph(rng, u, m, k);
                    for (Vertex a = 0; a < n; ++a) {
                        for (Vertex b = a + 1; b < n; ++b) {
                            ++pairs;
                            ASSERT_EQ(sees(g, a, b), !mergeable_oracle(g, a, b));
                        }
                    }
                }
            }
        }
    }
    EXPECT_GT(pairs, 5000);
}

TEST(LabelClasses, WildcardsOverApproximateEveryCompletion) {
    const MixedGraph g = build_petersen_11();
    auto classes = detail::LabelClasses<SmallSet>::from(g);
    const auto exact = classes.seeing_rows(SmallSet::full(10));
    for (int w = 0; w < 10; ++w) {
        for (std::size_t i = 0; i < classes.neighbor_list[w].size(); ++i) classes.set_code(w, i, 0);
    }
    const auto loose = classes.seeing_rows(SmallSet::full(10));
    for (int v = 0; v < 10; ++v) {
        EXPECT_EQ((exact[v] - loose[v]).count(), 0);
        EXPECT_EQ(loose[v].count(), 9);  // diameter 2, all midpoints free
    }
}
