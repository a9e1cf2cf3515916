#include <gtest/gtest.h>

#include <set>

#include <crystals/crossing_model.hpp>
#include <crystals/lattice.hpp>
#include <crystals/sail.hpp>

#include "test_util.hpp"

using namespace crystals;

namespace {

int component_size(const SupportingGraph& g, int k) {
    int count = 0;
    for (int id = 0; id < g.node_count(); ++id) count += g.node(id).k == k;
    return count;
}

TEST(SupportingGraph, SingleColorIsOneNode) {
    const SupportingGraph g(1);
    EXPECT_EQ(g.node_count(), 1);
    EXPECT_EQ(g.node(0).i, 1);
    EXPECT_EQ(g.node(0).j, 1);
    EXPECT_EQ(g.node(0).k, 1);
    // no edges at all
    EXPECT_EQ(g.node_id(1, 0, 1), -1);
    EXPECT_EQ(g.node_id(1, 1, 2), -1);
}

TEST(SupportingGraph, FourColorsComponentSizes) {
    const SupportingGraph g(4);
    EXPECT_EQ(component_size(g, 1), 4);
    EXPECT_EQ(component_size(g, 2), 6);
    EXPECT_EQ(component_size(g, 3), 6);
    EXPECT_EQ(component_size(g, 4), 4);
}

TEST(SupportingGraph, NodeCountMatchesReplicationRule) {
    // sum over k of k*(n-k+1)
    const SupportingGraph g3(3);
    EXPECT_EQ(g3.node_count(), 10);
    EXPECT_EQ(component_size(g3, 1), 3);
    EXPECT_EQ(component_size(g3, 2), 4);
    EXPECT_EQ(component_size(g3, 3), 3);
    for (int n = 1; n <= 6; ++n) {
        int expected = 0;
        for (int k = 1; k <= n; ++k) expected += k * (n - k + 1);
        EXPECT_EQ(SupportingGraph(n).node_count(), expected);
    }
}

TEST(SupportingGraph, MultinodeSizes) {
    const SupportingGraph g(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= i; ++j)
            EXPECT_EQ(g.multinode(i, j).size(), static_cast<std::size_t>(4 - i + 1));
}

TEST(SupportingGraph, RejectsZero) { EXPECT_THROW(SupportingGraph(0), input_error); }

TEST(Slacks, AllZeroParameterHasNoMoves) {
    const SupportingGraph g(3);
    const std::vector<int> c{0, 0, 0};
    const FeasibleFunction f{c, std::vector<int>(g.node_count(), 0)};
    for (int level = 1; level <= 3; ++level) {
        const LevelSlacks s = slacks(g, f, level);
        EXPECT_EQ(s.active_j, 0);
        EXPECT_EQ(s.switch_node, -1);
    }
}

TEST(Slacks, SingleNodeGraphActive) {
    const SupportingGraph g(1);
    const FeasibleFunction f{{2}, {0}};
    const LevelSlacks s = slacks(g, f, 1);
    EXPECT_EQ(s.active_j, 1);
    EXPECT_EQ(s.switch_node, g.node_id(1, 1, 1));
    EXPECT_EQ(s.total[0], 2);
    EXPECT_EQ(s.reduced[0], 2);
}

TEST(Slacks, SourceOfK111HasAllLevelsActive) {
    const SupportingGraph g(3);
    const std::vector<int> c{1, 1, 1};
    const FeasibleFunction f = principal_function(g, c, {0, 0, 0});
    for (int level = 1; level <= 3; ++level)
        EXPECT_GT(slacks(g, f, level).active_j, 0) << "level " << level;
    // cross-check: the source of the generated crystal has outdegree 3
    const Crystal k = generate(c);
    EXPECT_EQ(k.out_degree(k.source()), 3);
}

TEST(Slacks, RejectsInfeasible) {
    const SupportingGraph g(2);
    FeasibleFunction f{{1, 1}, std::vector<int>(g.node_count(), 0)};
    f.values[g.node_id(1, 1, 1)] = 5; // box violated
    EXPECT_THROW(slacks(g, f, 1), input_error);
}

TEST(ApplyMove, NoneAtZeroParameter) {
    const SupportingGraph g(2);
    const FeasibleFunction f{{0, 0}, std::vector<int>(g.node_count(), 0)};
    EXPECT_FALSE(apply_move(g, f, 1).has_value());
    EXPECT_FALSE(apply_move(g, f, 2).has_value());
}

TEST(ApplyMove, A1PathOfLengthTwo) {
    const SupportingGraph g(1);
    FeasibleFunction f{{2}, {0}};
    auto f1 = apply_move(g, f, 1);
    ASSERT_TRUE(f1.has_value());
    EXPECT_EQ(f1->values[0], 1);
    auto f2 = apply_move(g, *f1, 1);
    ASSERT_TRUE(f2.has_value());
    EXPECT_EQ(f2->values[0], 2);
    EXPECT_FALSE(apply_move(g, *f2, 1).has_value());
}

TEST(ApplyMove, StringS31ReachesPrincipalFunction) {
    // applying F_1 then F_2 then F_3 (the string S_{3,1}) to f[(0,0,0)]
    // must land on f[(1,0,0)]: constant 1 on G^1, zero elsewhere
    const SupportingGraph g(3);
    const std::vector<int> c{1, 1, 1};
    FeasibleFunction f = principal_function(g, c, {0, 0, 0});
    for (int level : {1, 2, 3}) {
        auto next = apply_move(g, f, level);
        ASSERT_TRUE(next.has_value());
        f = *next;
    }
    EXPECT_EQ(f.values, principal_function(g, c, {1, 0, 0}).values);
}

TEST(ApplyMove, EveryMovePreservesFeasibility) {
    // walk whole move graphs revalidating after each move
    for (const auto& c : {std::vector<int>{2, 1}, {1, 1, 1}, {2, 1, 2}, {1, 0, 1, 1}}) {
        const int n = static_cast<int>(c.size());
        const SupportingGraph g(n);
        std::vector<FeasibleFunction> frontier{principal_function(g, c, std::vector<int>(n, 0))};
        std::set<std::vector<int>> seen{frontier.front().values};
        while (!frontier.empty()) {
            FeasibleFunction f = frontier.back();
            frontier.pop_back();
            for (int level = 1; level <= n; ++level)
                if (auto next = apply_move(g, f, level)) {
                    ASSERT_FALSE(feasibility_violation(g, *next).has_value());
                    if (seen.insert(next->values).second) frontier.push_back(*next);
                }
        }
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(generate(c).vertex_count()));
    }
}

TEST(Generate, K111HasSixtyFourVerticesAndHundredTwoEdges) {
    const Crystal k = generate({1, 1, 1});
    EXPECT_EQ(k.vertex_count(), 64);
    EXPECT_EQ(k.edge_count(), 102u);
}

TEST(Generate, EmptyParameterBox) {
    const Crystal k = generate({0, 0});
    EXPECT_EQ(k.vertex_count(), 1);
    EXPECT_EQ(k.edge_count(), 0u);
}

TEST(Generate, K12MatchesSailModel) {
    const Crystal k = generate({1, 2});
    EXPECT_EQ(k.vertex_count(), 15);
    EXPECT_TRUE(isomorphic(k, sail_build(1, 2)));
}

TEST(Generate, VertexCapIsEnforced) {
    GenerateOptions opts;
    opts.max_vertices = 10;
    EXPECT_THROW(generate({1, 1, 1}, opts), resource_error);
}

TEST(Generate, RejectsNegativeParameter) {
    EXPECT_THROW(generate({1, -1}), input_error);
}

TEST(Generate, WideValuesUseTheSameDedup) {
    // entries above one byte switch the vertex key packing
    const Crystal k = generate({300});
    EXPECT_EQ(k.vertex_count(), 301);
    EXPECT_EQ(k.edge_count(), 300u);
    EXPECT_TRUE(isomorphic(generate({260, 1}), sail_build(260, 1)));
}

TEST(Generate, PrincipalFunctionsFormTheBox) {
    // exactly prod(c_i + 1) principal functions occur among the vertices
    const std::vector<int> c{2, 1, 2};
    const GeneratedCrystal gen = generate_indexed(c);
    std::set<VertexId> hits;
    for_each_box_point(std::vector<int>(3, 0), c, [&](const std::vector<int>& a) {
        const VertexId v = gen.locate(principal_function(gen.graph, c, a));
        EXPECT_NE(v, kNoVertex);
        hits.insert(v);
    });
    EXPECT_EQ(hits.size(), box_size(c));
    // and they form the lattice reached by the operator strings
    for_each_box_point(std::vector<int>(3, 0), c, [&](const std::vector<int>& a) {
        EXPECT_EQ(gen.locate(principal_function(gen.graph, c, a)),
                  principal_vertex(gen.crystal, a));
    });
}

TEST(UpperLatticeVertex, ZeroDeviationIsPrincipal) {
    const SupportingGraph g(3);
    const std::vector<int> c{2, 1, 2};
    for_each_box_point(std::vector<int>(3, 0), c, [&](const std::vector<int>& a) {
        EXPECT_EQ(upper_lattice_vertex(g, c, a, {0, 0}).values,
                  principal_function(g, c, a).values);
    });
}

TEST(UpperLatticeVertex, LeftRectangleIndicator) {
    // c=(1,1,1), a=0, Delta=(1,0): value 1 exactly on the left rectangle of G^1
    const SupportingGraph g(3);
    const FeasibleFunction f = upper_lattice_vertex(g, {1, 1, 1}, {0, 0, 0}, {1, 0});
    for (int id = 0; id < g.node_count(); ++id) {
        const auto& nd = g.node(id);
        const bool left_rect_of_g1 = nd.k == 1 && nd.j <= 3 - nd.k;
        EXPECT_EQ(f.values[id], left_rect_of_g1 ? 1 : 0);
    }
}

TEST(UpperLatticeVertex, BoundaryValuesEncodeLoci) {
    // level-n values give a, level-1 values give b = zeta(a,Delta).b
    const SupportingGraph g(3);
    const std::vector<int> c{2, 2, 2};
    for_each_box_point(std::vector<int>(3, 0), c, [&](const std::vector<int>& a) {
        std::vector<int> lo(2), hi(2);
        for (int t = 0; t < 2; ++t) {
            lo[t] = -a[t + 1];
            hi[t] = c[t] - a[t];
        }
        for_each_box_point(lo, hi, [&](const std::vector<int>& dev) {
            const FeasibleFunction f = upper_lattice_vertex(g, c, a, dev);
            const auto b = zeta(c, a, dev).b;
            for (int k = 1; k <= 3; ++k) {
                EXPECT_EQ(f.values[g.node_id(k, k, 3 - k + 1)], a[k - 1]); // v_n^k(n-k+1)
                EXPECT_EQ(f.values[g.node_id(k, 1, 1)], b[k - 1]);         // v_1^k(1)
            }
        });
    });
}

TEST(UpperLatticeVertex, MatchesStringIterations) {
    // f_{a,Delta+1_k} is reached from f_{a,Delta} by the string S_{n-1,k}
    const SupportingGraph g(3);
    const std::vector<int> c{1, 1, 1};
    for_each_box_point(std::vector<int>(3, 0), c, [&](const std::vector<int>& a) {
        std::vector<int> lo(2), hi(2);
        for (int t = 0; t < 2; ++t) {
            lo[t] = -a[t + 1];
            hi[t] = c[t] - a[t];
        }
        for_each_box_point(lo, hi, [&](const std::vector<int>& dev) {
            for (int k = 1; k <= 2; ++k) {
                if (dev[k - 1] >= hi[k - 1]) continue;
                std::vector<int> next = dev;
                ++next[k - 1];
                FeasibleFunction f = upper_lattice_vertex(g, c, a, dev);
                for (Color move : principal_string(2, k)) {
                    auto stepped = apply_move(g, f, move);
                    ASSERT_TRUE(stepped.has_value());
                    f = *stepped;
                }
                EXPECT_EQ(f.values, upper_lattice_vertex(g, c, a, next).values);
            }
        });
    });
}

TEST(UpperLatticeVertex, RejectsOutOfBox) {
    const SupportingGraph g(3);
    EXPECT_THROW(upper_lattice_vertex(g, {1, 1, 1}, {0, 0, 0}, {2, 0}), input_error);
    EXPECT_THROW(upper_lattice_vertex(g, {1, 1, 1}, {0, 0, 0}, {0, -1}), input_error);
}

TEST(UpperLatticeVertex, LiesOnSharedMiddlePath) {
    // the vertex f_{0,(1,0)} lies on the 2-path common to K^up[0,0,0] and
    // K^low[1,0,0] of K(1,1,1)
    const std::vector<int> c{1, 1, 1};
    const GeneratedCrystal gen = generate_indexed(c);
    const VertexId v = gen.locate(upper_lattice_vertex(gen.graph, c, {0, 0, 0}, {1, 0}));
    ASSERT_NE(v, kNoVertex);
    const auto uppers = decompose(gen.crystal, Side::Upper);
    const auto lowers = decompose(gen.crystal, Side::Lower);
    auto member = [&](const SubcrystalHandle& h) {
        return std::binary_search(h.vertices.begin(), h.vertices.end(), v);
    };
    for (const auto& h : uppers)
        EXPECT_EQ(member(h), h.locus == std::vector<int>({0, 0, 0}));
    for (const auto& h : lowers)
        EXPECT_EQ(member(h), h.locus == std::vector<int>({1, 0, 0}));
}

TEST(FeasibleDump, FixedShape) {
    const SupportingGraph g(2);
    const FeasibleFunction f = principal_function(g, {1, 2}, {1, 2});
    const auto j = feasible_function_json(g, f);
    EXPECT_EQ(j["c"], nlohmann::ordered_json({1, 2}));
    ASSERT_EQ(j["levels"].size(), 2u);
    EXPECT_EQ(j["levels"][0].size(), 2u); // level 1: one node in each of G^1, G^2
    EXPECT_EQ(j["levels"][1].size(), 2u);
}

} // namespace
