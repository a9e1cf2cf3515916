#include <gtest/gtest.h>

#include <map>
#include <set>

#include <crystals/crossing_model.hpp>
#include <crystals/extract.hpp>
#include <crystals/lattice.hpp>
#include <crystals/verify.hpp>
#include <crystals/worm.hpp>

#include "test_util.hpp"

using namespace crystals;

namespace {

std::size_t fixed_points(const SymmetricCrystal& sym) {
    std::size_t count = 0;
    for (VertexId v = 0; v < sym.base.vertex_count(); ++v) count += sym.self_complementary(v);
    return count;
}

TEST(Complementarity, FixesSourceAndSink) {
    const SymmetricCrystal sym = complementarity(generate({1, 1, 1}));
    EXPECT_EQ(sym.sigma[sym.base.meta()->source], sym.base.meta()->source);
    EXPECT_EQ(sym.sigma[sym.base.meta()->sink], sym.base.meta()->sink);
}

TEST(Complementarity, PrincipalVerticesReverse) {
    const Crystal k = generate({1, 1, 1});
    const SymmetricCrystal sym = complementarity(k);
    for_each_box_point({0, 0, 0}, {1, 1, 1}, [&](const std::vector<int>& a) {
        const std::vector<int> rev{a[2], a[1], a[0]};
        EXPECT_EQ(sym.sigma[principal_vertex(k, a)], principal_vertex(k, rev));
    });
}

TEST(Complementarity, K101HasFiveFixedPoints) {
    EXPECT_EQ(fixed_points(complementarity(generate({1, 0, 1}))), 5u);
}

TEST(Complementarity, MapsEdgesToComplementaryEdges) {
    const Crystal k = generate({2, 1, 2});
    const SymmetricCrystal sym = complementarity(k);
    for (const Edge& e : k.edges())
        EXPECT_EQ(k.succ(sym.sigma[e.from], sym.complement(e.color)), sym.sigma[e.to]);
}

TEST(Complementarity, AgreesWithRelabelRoute) {
    for (const auto& c : {std::vector<int>{1, 0, 1}, {2, 1, 2}, {1, 0, 0, 1}, {1, 1, 1, 1}}) {
        const Crystal k = generate(c);
        EXPECT_EQ(complementarity(k).sigma, sigma_by_relabel(k));
    }
}

TEST(Complementarity, RejectsNonPalindromic) {
    EXPECT_THROW(complementarity(generate({1, 0, 0})), input_error);
    EXPECT_THROW(sigma_by_relabel(generate({2, 1})), input_error);
}

TEST(ExtractB, B10FromK101) {
    const Crystal b = extract_B(complementarity(generate({1, 0, 1})));
    EXPECT_EQ(b.vertex_count(), 5);
    EXPECT_EQ(testutil::path_color_word(b), (std::vector<Color>{1, 2, 2, 1}));
    ASSERT_TRUE(b.meta().has_value());
    EXPECT_EQ(b.meta()->family, Family::B);
    EXPECT_EQ(b.meta()->c, (std::vector<int>{1, 0}));
}

TEST(ExtractB, B01FromK010) {
    const Crystal b = extract_B(complementarity(generate({0, 1, 0})));
    EXPECT_EQ(b.vertex_count(), 4);
    EXPECT_EQ(testutil::path_color_word(b), (std::vector<Color>{2, 1, 2}));
}

TEST(ExtractB, MatchesWormModelSmall) {
    for (int c1 = 0; c1 <= 2; ++c1)
        for (int c2 = 0; c2 <= 2; ++c2) {
            const Crystal b = extract_B(complementarity(generate({c1, c2, c1})));
            EXPECT_TRUE(isomorphic(b, worm_generate(c1, c2))) << c1 << "," << c2;
        }
}

TEST(ExtractB, RejectsEvenColorCount) {
    EXPECT_THROW(extract_B(complementarity(generate({1, 1}))), input_error);
}

TEST(ExtractC, C10FromK1001) {
    const Crystal c = extract_C(complementarity(generate({1, 0, 0, 1})));
    EXPECT_EQ(c.vertex_count(), 4);
    EXPECT_EQ(testutil::path_color_word(c), (std::vector<Color>{1, 2, 1}));
    EXPECT_EQ(c.meta()->family, Family::C);
}

TEST(ExtractC, TrivialCrystal) {
    EXPECT_EQ(extract_C(complementarity(generate({0, 0, 0, 0}))).vertex_count(), 1);
}

TEST(ExtractC, MatchesWormModelWithSwappedColors) {
    for (int c1 = 0; c1 <= 2; ++c1)
        for (int c2 = 0; c2 <= 2; ++c2) {
            const Crystal c = extract_C(complementarity(generate({c1, c2, c2, c1})));
            const Crystal reference = worm_generate(c2, c1);
            EXPECT_TRUE(isomorphic(relabel_colors(c, {2, 1}), reference)) << c1 << "," << c2;
        }
}

TEST(ExtractC, OneColorSpecialization) {
    // n = 1: the extract of a symmetric A_2-crystal via the word F1 F2^2 F1
    const Crystal c = extract_C(complementarity(generate({2, 2})));
    EXPECT_EQ(c.colors(), 1);
    EXPECT_EQ(c.vertex_count(), 3); // diagonal of the 2-dimensional sail lattice
    EXPECT_EQ(testutil::path_color_word(c), (std::vector<Color>{1, 1}));
}

TEST(ExtractHigherRank, B3FromSymmetricA5) {
    const SymmetricCrystal sym = complementarity(generate({1, 1, 1, 1, 1}));
    const Crystal b = extract_B(sym);
    ASSERT_TRUE(b.meta().has_value());
    EXPECT_EQ(b.meta()->c, (std::vector<int>{1, 1, 1}));
    for (Color i = 1; i <= 3; ++i) EXPECT_EQ(head_tail(b, b.source(), i).head, 1);
    const auto report = verify_BC(b, Family::B);
    EXPECT_TRUE(report.summary);
    for (const auto& check : report.checks) EXPECT_TRUE(check.pass) << check.axiom;
}

TEST(ExtractHigherRank, C3FromSymmetricA6) {
    const SymmetricCrystal sym = complementarity(generate({1, 1, 0, 0, 1, 1}));
    const Crystal c = extract_C(sym);
    ASSERT_TRUE(c.meta().has_value());
    EXPECT_EQ(c.meta()->c, (std::vector<int>{1, 1, 0}));
    const auto report = verify_BC(c, Family::C);
    EXPECT_TRUE(report.summary);
    const Check* bc4p = report.find("BC4'");
    ASSERT_NE(bc4p, nullptr);
    EXPECT_TRUE(bc4p->pass);
}

TEST(ExtractInvariants, BarLengthsMatchUnderlyingColors) {
    // h_bar(v) = h_i(v) = h_i'(v) and same for tails, for every v in S
    for (const auto& c : {std::vector<int>{2, 1, 2}, {1, 0, 0, 1}, {1, 1, 1, 1}}) {
        const Crystal k = generate(c);
        const SymmetricCrystal sym = complementarity(k);
        const ExtractResult res = (k.colors() % 2 == 1) ? extract_B_indexed(sym)
                                                        : extract_C_indexed(sym);
        const int n = res.crystal.colors();
        for (VertexId v = 0; v < res.crystal.vertex_count(); ++v) {
            const VertexId base_v = res.to_base[v];
            for (Color i = 1; i < n; ++i) {
                const MonoStats bar = head_tail(res.crystal, v, i);
                EXPECT_EQ(bar.head, head_tail(k, base_v, i).head);
                EXPECT_EQ(bar.head, head_tail(k, base_v, sym.complement(i)).head);
                EXPECT_EQ(bar.tail, head_tail(k, base_v, i).tail);
                EXPECT_EQ(bar.tail, head_tail(k, base_v, sym.complement(i)).tail);
            }
        }
    }
}

TEST(ExtractInvariants, SelfComplementaryPrincipalVertices) {
    // fixed principal vertices are exactly p[a] with palindromic a, and the
    // interval between two of them extracts to the smaller B-crystal
    const std::vector<int> c{2, 1, 2};
    const Crystal k = generate(c);
    const SymmetricCrystal sym = complementarity(k);
    const LatticeMap lattice = build_lattice_map(k);
    for_each_box_point({0, 0, 0}, c, [&](const std::vector<int>& a) {
        const bool palindromic = a[0] == a[2];
        EXPECT_EQ(sym.self_complementary(lattice.at(a)), palindromic);
    });
    auto [handle, sub] = interval(k, {1, 0, 1}, {2, 1, 2});
    const Crystal small = extract_B(complementarity(sub));
    EXPECT_TRUE(isomorphic(small, extract_B(complementarity(generate({1, 1, 1})))));
    EXPECT_TRUE(isomorphic(small, worm_generate(1, 1)));
}

TEST(ExtractInvariants, CartanProfileOfCExtract) {
    // across 2-bar edges eps_1 changes by +2; across 1-bar edges eps_2 by +1
    const Crystal c = extract_C(complementarity(generate({1, 1, 1, 1})));
    auto eps = [&](Color i, VertexId v) {
        const MonoStats s = head_tail(c, v, i);
        return s.head - s.tail;
    };
    for (const Edge& e : c.edges()) {
        if (e.color == 2) {
            EXPECT_EQ(eps(1, e.from) - eps(1, e.to), -2);
        }
        if (e.color == 1) {
            EXPECT_EQ(eps(2, e.from) - eps(2, e.to), -1);
        }
    }
}

TEST(DescribeB, SourceIsOrigin) {
    const SymmetricCrystal sym = complementarity(generate({1, 0, 1}));
    const BDescription d = describe_B(sym, sym.base.meta()->source);
    EXPECT_EQ(d, (BDescription{0, 0, 0, 0}));
}

TEST(DescribeB, RejectsOffS) {
    const SymmetricCrystal sym = complementarity(generate({1, 0, 1}));
    for (VertexId v = 0; v < sym.base.vertex_count(); ++v)
        if (!sym.self_complementary(v)) {
            EXPECT_THROW(describe_B(sym, v), input_error);
            break;
        }
}

TEST(EnumerateB, CountsMatchFigures) {
    EXPECT_EQ(enumerate_B(1, 0).size(), 5u);
    EXPECT_EQ(enumerate_B(0, 1).size(), 4u);
}

TEST(EnumerateB, CountsEqualFixedPoints) {
    for (int c1 = 0; c1 <= 2; ++c1)
        for (int c2 = 0; c2 <= 2; ++c2) {
            const SymmetricCrystal sym = complementarity(generate({c1, c2, c1}));
            EXPECT_EQ(enumerate_B(c1, c2).size(), fixed_points(sym)) << c1 << "," << c2;
        }
}

TEST(DescribeB, BijectionWithEnumeration) {
    const SymmetricCrystal sym = complementarity(generate({2, 1, 2}));
    const auto table = describe_all_B(sym);
    std::set<BDescription> seen;
    for (VertexId v = 0; v < sym.base.vertex_count(); ++v)
        if (table[v]) {
            EXPECT_TRUE(seen.insert(*table[v]).second);
        }
    const auto enumerated = enumerate_B(2, 1);
    EXPECT_EQ(seen.size(), enumerated.size());
    for (const auto& d : enumerated) EXPECT_TRUE(seen.count(d));
}

TEST(DescribeC, SourceIsOrigin) {
    const SymmetricCrystal sym = complementarity(generate({1, 0, 0, 1}));
    EXPECT_EQ(describe_C(sym, sym.base.meta()->source), (CDescription{0, 0, 0, 0}));
}

TEST(EnumerateC, CountMatchesFigure) { EXPECT_EQ(enumerate_C(1, 0).size(), 4u); }

TEST(EnumerateC, CountsEqualFixedPoints) {
    for (int c1 = 0; c1 <= 2; ++c1)
        for (int c2 = 0; c2 <= 2; ++c2) {
            const SymmetricCrystal sym = complementarity(generate({c1, c2, c2, c1}));
            EXPECT_EQ(enumerate_C(c1, c2).size(), fixed_points(sym)) << c1 << "," << c2;
        }
}

TEST(DescribeC, MiddleParameterIsSymmetric) {
    // the middle subcrystal holding v has parameter (c2+delta, c2+delta)
    const std::vector<int> c{2, 1, 1, 2};
    const SymmetricCrystal sym = complementarity(generate(c));
    const auto table = describe_all_C(sym);
    for (VertexId v = 0; v < sym.base.vertex_count(); ++v)
        if (table[v]) {
            const auto& d = *table[v];
            const std::vector<int> dev{d.delta, 0, -d.delta};
            const std::vector<int> a{d.a1, d.a2, d.a2 + std::min(d.delta, 0),
                                     d.a1 + std::max(d.delta, 0)};
            const auto mp = middle_params(c, a, dev);
            ASSERT_EQ(mp.parameter.size(), 2u);
            EXPECT_EQ(mp.parameter[0], c[1] + d.delta);
            EXPECT_EQ(mp.parameter[0], mp.parameter[1]);
        }
}

TEST(WormOfB, PrincipalDescription) {
    const Worm w = worm_of_B({0, 0, 0, 0}, 2, 2);
    EXPECT_EQ(w, (Worm{0, 0, 0, 0, 0, 0}));
}

TEST(WormOfB, HWormExample) {
    const Worm w = worm_of_B({0, 0, 1, 1}, 1, 0);
    EXPECT_EQ(w.xp, 0);
    EXPECT_EQ(w.xpp, 2);
    EXPECT_EQ(w.x, 1);
    EXPECT_EQ(w.y, 0);
    EXPECT_EQ(w.yp, 0);
    EXPECT_EQ(w.ypp, 0);
}

TEST(WormOfB, RejectsInvalidDescription) {
    EXPECT_THROW(worm_of_B({0, 0, 3, 0}, 2, 2), input_error);
}

// all admissible worms in the rectangle, enumerated independently
std::set<Worm> all_worms(int c1, int c2) {
    std::set<Worm> out;
    for (int xp = 0; xp <= 2 * c1; xp += 2)
        for (int xpp = xp; xpp <= 2 * c1; xpp += 2)
            for (int x = xp; x <= xpp; ++x)
                for (int y = 0; y <= c2; ++y)
                    for (int yp = 0; yp <= y; ++yp)
                        for (int ypp = y; ypp <= c2; ++ypp) {
                            const Worm w{xp, y, xpp, yp, x, ypp};
                            if (worm_admissible(w, c1, c2)) out.insert(w);
                        }
    return out;
}

TEST(WormOfB, BijectionOntoWormSet) {
    for (int c1 = 0; c1 <= 4; ++c1)
        for (int c2 = 0; c2 <= 4; ++c2) {
            const auto worms = all_worms(c1, c2);
            std::set<Worm> image;
            for (const auto& d : enumerate_B(c1, c2)) {
                const Worm w = worm_of_B(d, c1, c2);
                EXPECT_TRUE(image.insert(w).second) << "not injective at " << c1 << "," << c2;
                EXPECT_TRUE(worms.count(w));
            }
            EXPECT_EQ(image.size(), worms.size()) << c1 << "," << c2;
        }
}

TEST(WormOfB, EdgesTransferToWormMoves) {
    // 2-bar edges map to worm color 2 moves, 1-bar edges to color 1 moves
    for (const auto& cc : {std::pair{1, 1}, {2, 1}, {2, 2}, {1, 2}}) {
        const auto [c1, c2] = cc;
        const SymmetricCrystal sym = complementarity(generate({c1, c2, c1}));
        const auto table = describe_all_B(sym);
        const ExtractResult res = extract_B_indexed(sym);
        for (const Edge& e : res.crystal.edges()) {
            const Worm wu = worm_of_B(*table[res.to_base[e.from]], c1, c2);
            const Worm wv = worm_of_B(*table[res.to_base[e.to]], c1, c2);
            const auto moved = worm_apply(wu, e.color, c1, c2);
            ASSERT_TRUE(moved.has_value());
            EXPECT_EQ(*moved, wv);
        }
    }
}

TEST(WormOfC, PrincipalDescription) {
    EXPECT_EQ(worm_of_C({0, 0, 0, 0}, 2, 2), (Worm{0, 0, 0, 0, 0, 0}));
}

TEST(WormOfC, VerticalSegmentExample) {
    // c = (1,0), d = (0,0,1,0): V-shape with Y'' one step above
    const Worm w = worm_of_C({0, 0, 1, 0}, 1, 0);
    EXPECT_EQ(w, (Worm{0, 0, 0, 0, 0, 1}));
}

TEST(WormOfC, BijectionOntoSwappedWormSet) {
    for (int c1 = 0; c1 <= 3; ++c1)
        for (int c2 = 0; c2 <= 3; ++c2) {
            const auto worms = all_worms(c2, c1);
            std::set<Worm> image;
            for (const auto& d : enumerate_C(c1, c2)) {
                const Worm w = worm_of_C(d, c1, c2);
                EXPECT_TRUE(image.insert(w).second);
                EXPECT_TRUE(worms.count(w));
            }
            EXPECT_EQ(image.size(), worms.size()) << c1 << "," << c2;
        }
}

TEST(WormOfC, EdgesTransferWithColorSwap) {
    // 2-bar edges induce worm color 1 moves, 1-bar edges color 2 moves
    for (const auto& cc : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        const auto [c1, c2] = cc;
        const SymmetricCrystal sym = complementarity(generate({c1, c2, c2, c1}));
        const auto table = describe_all_C(sym);
        const ExtractResult res = extract_C_indexed(sym);
        for (const Edge& e : res.crystal.edges()) {
            const Worm wu = worm_of_C(*table[res.to_base[e.from]], c1, c2);
            const Worm wv = worm_of_C(*table[res.to_base[e.to]], c1, c2);
            const auto moved = worm_apply(wu, e.color == 2 ? 1 : 2, c2, c1);
            ASSERT_TRUE(moved.has_value());
            EXPECT_EQ(*moved, wv);
        }
    }
}

TEST(Omega, SourceValueIsParameter) {
    EXPECT_EQ(omega({0, 0, 0, 0}, 3, 2), 3);
    EXPECT_EQ(omega_prime({0, 0, 0, 0}, 3, 2), 3);
}

TEST(Omega, SinkHasNoHead) {
    const SymmetricCrystal sym = complementarity(generate({2, 1, 2}));
    const BDescription d = describe_B(sym, sym.base.meta()->sink);
    EXPECT_EQ(omega(d, 2, 1), 0);
}

TEST(Omega, MatchesMeasuredHeadLengths) {
    const SymmetricCrystal sym = complementarity(generate({2, 1, 2}));
    const auto table = describe_all_B(sym);
    const ExtractResult res = extract_B_indexed(sym);
    for (VertexId v = 0; v < res.crystal.vertex_count(); ++v)
        EXPECT_EQ(omega(*table[res.to_base[v]], 2, 1), head_tail(res.crystal, v, 1).head);
}

TEST(OmegaPrime, MatchesMeasuredHeadLengths) {
    const SymmetricCrystal sym = complementarity(generate({2, 1, 1, 2}));
    const auto table = describe_all_C(sym);
    const ExtractResult res = extract_C_indexed(sym);
    for (VertexId v = 0; v < res.crystal.vertex_count(); ++v)
        EXPECT_EQ(omega_prime(*table[res.to_base[v]], 2, 1), head_tail(res.crystal, v, 1).head);
}

} // namespace
