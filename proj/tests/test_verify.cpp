#include <gtest/gtest.h>

#include <random>

#include <crystals/assemble.hpp>
#include <crystals/crossing_model.hpp>
#include <crystals/extract.hpp>
#include <crystals/json_io.hpp>
#include <crystals/sail.hpp>
#include <crystals/verify.hpp>
#include <crystals/worm.hpp>

#include "test_util.hpp"

using namespace crystals;

namespace {

TEST(VerifyA, GeneratedCrystalPasses) {
    const auto report = verify_A(generate({1, 1, 1}));
    EXPECT_TRUE(report.summary);
    for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << c.axiom;
}

TEST(VerifyA, SingleVertexPassesVacuously) {
    EXPECT_TRUE(verify_A(make_crystal(2, 1, {})).summary);
}

TEST(VerifyA, PassesOnAllRoutes) {
    EXPECT_TRUE(verify_A(generate({2, 1})).summary);
    EXPECT_TRUE(verify_A(assemble({1, 1, 1})).summary);
    EXPECT_TRUE(verify_A(sail_build(2, 3)).summary);
}

TEST(VerifyA, DeletedEdgeIsCaught) {
    const Crystal base = sail_build(1, 1);
    for (std::size_t t = 0; t < base.edge_count(); ++t) {
        const Crystal mutated = testutil::delete_edge(base, t);
        const auto report = verify_A(mutated);
        EXPECT_FALSE(report.summary) << "deleting edge " << t << " went unnoticed";
        for (const auto& c : report.checks)
            if (!c.pass) {
                EXPECT_TRUE(revalidate_witness(mutated, c)) << c.axiom << ": " << c.detail;
            }
    }
}

TEST(VerifyA, WitnessesAreConcrete) {
    // drop one 2-edge of K(1,1); the report must carry a usable witness
    const Crystal base = sail_build(1, 1);
    for (std::size_t t = 0; t < base.edge_count(); ++t) {
        if (base.edges()[t].color != 2) continue;
        const Crystal mutated = testutil::delete_edge(base, t);
        const auto report = verify_A(mutated);
        ASSERT_FALSE(report.summary);
        bool found_witness = false;
        for (const auto& c : report.checks)
            if (!c.pass && !c.witness.empty()) {
                found_witness = true;
                for (VertexId v : c.witness) EXPECT_TRUE(mutated.has_vertex(v));
            }
        EXPECT_TRUE(found_witness);
    }
}

TEST(VerifyBC, BExtractPasses) {
    const auto report = verify_BC(extract_B(complementarity(generate({2, 1, 2}))), Family::B);
    EXPECT_TRUE(report.summary);
    const Check* bc4 = report.find("BC4");
    ASSERT_NE(bc4, nullptr);
    EXPECT_TRUE(bc4->pass);
}

TEST(VerifyBC, CExtractPasses) {
    const auto report = verify_BC(extract_C(complementarity(generate({1, 0, 0, 1}))), Family::C);
    EXPECT_TRUE(report.summary);
    const Check* bc4p = report.find("BC4'");
    ASSERT_NE(bc4p, nullptr);
    EXPECT_TRUE(bc4p->pass);
}

TEST(VerifyBC, WormGraphPassesAsB) {
    EXPECT_TRUE(verify_BC(worm_generate(1, 2), Family::B).summary);
}

TEST(VerifyBC, ColorSwapFlipsCartanProfile) {
    // relabeled worm graphs carry the C profile: BC4 fails, BC4' passes
    const Crystal swapped = relabel_colors(worm_generate(2, 1), {2, 1});
    const auto as_b = verify_BC(swapped, Family::B);
    EXPECT_FALSE(as_b.summary);
    const Check* bc4 = as_b.find("BC4");
    ASSERT_NE(bc4, nullptr);
    EXPECT_FALSE(bc4->pass);
    EXPECT_TRUE(revalidate_witness(swapped, *bc4));
    // recompute the epsilon differences on the witness edge by hand
    const VertexId u = bc4->witness.at(0), v = bc4->witness.at(1);
    const Color i = bc4->colors.at(0), j = bc4->colors.at(1);
    const auto eu = head_tail(swapped, u, j), ev = head_tail(swapped, v, j);
    const int measured = (eu.head - eu.tail) - (ev.head - ev.tail);
    EXPECT_NE(measured, detail::cartan_m(Family::B, 2, i, j));
    EXPECT_EQ(measured, detail::cartan_m(Family::C, 2, i, j));

    const auto as_c = verify_BC(swapped, Family::C);
    EXPECT_TRUE(as_c.summary);
    const Check* bc4p = as_c.find("BC4'");
    ASSERT_NE(bc4p, nullptr);
    EXPECT_TRUE(bc4p->pass);
}

TEST(VerifyBC, RejectsFamilyA) {
    EXPECT_THROW(verify_BC(worm_generate(1, 1), Family::A), input_error);
}

TEST(Mutation, RandomEdgeDeletionAlwaysNoticed) {
    std::mt19937 rng(20240817);
    const Crystal a = generate({1, 1, 1});
    const Crystal b = worm_generate(2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        {
            const std::size_t idx = rng() % a.edge_count();
            const Crystal mutated = testutil::delete_edge(a, idx);
            const auto report = verify_A(mutated);
            EXPECT_FALSE(report.summary);
            for (const auto& c : report.checks)
                if (!c.pass) {
                    EXPECT_TRUE(revalidate_witness(mutated, c)) << c.axiom;
                }
        }
        {
            const std::size_t idx = rng() % b.edge_count();
            const Crystal mutated = testutil::delete_edge(b, idx);
            const auto report = verify_BC(mutated, Family::B);
            EXPECT_FALSE(report.summary);
            for (const auto& c : report.checks)
                if (!c.pass) {
                    EXPECT_TRUE(revalidate_witness(mutated, c)) << c.axiom;
                }
        }
    }
}

TEST(Report, SerializesWithFixedKeys) {
    const auto report = verify_A(generate({1, 0}));
    const auto j = report_to_json(report);
    EXPECT_TRUE(j.contains("summary"));
    EXPECT_TRUE(j.contains("checks"));
    ASSERT_GT(j["checks"].size(), 0u);
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("axiom"));
        EXPECT_TRUE(c.contains("status"));
        EXPECT_TRUE(c.contains("witness"));
        EXPECT_TRUE(c.contains("detail"));
    }
}

} // namespace
