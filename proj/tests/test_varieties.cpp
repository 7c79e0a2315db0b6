#include <gtest/gtest.h>

#include <qalg/varieties.hpp>
#include <support/fixtures.hpp>

using namespace qalg;
using namespace qalg::testing;

namespace {

struct Pipeline {
    MonomialAlgebra alg;
    StackedVerdict verdict;
    HHPresentation pres;
    std::vector<SimpleVarietyReport> reports;
    std::vector<ProjectiveDimension> pds;
};

Pipeline run(const std::string& fixture) {
    auto alg = load_fixture(fixture);
    auto aut = build_tail_automaton(alg);
    auto verdict = classify_stacked(alg, aut);
    auto pres = find_generators(alg, verdict);
    auto reports = classify_simples(alg, pres);
    std::vector<ProjectiveDimension> pds;
    for (VertexId v = 0; v < alg.vertex_count(); ++v) pds.push_back(proj_dim_simple(alg, aut, v));
    return {std::move(alg), verdict, pres, reports, pds};
}

std::map<std::string, std::string> statuses(const Pipeline& p) {
    std::map<std::string, std::string> out;
    for (const auto& r : p.reports) out[p.alg.quiver().vertex_name(r.vertex)] = to_string(r.status);
    return out;
}

}  // namespace

TEST(Classify, FourCycleTrail) {
    auto p = run("four_cycle_trail.qalg");
    EXPECT_EQ(statuses(p), (std::map<std::string, std::string>{{"1", "Nontrivial"},
                                                               {"2", "Nontrivial"},
                                                               {"3", "Nontrivial"},
                                                               {"4", "Nontrivial"},
                                                               {"5", "Trivial"},
                                                               {"6", "Trivial"}}));
    EXPECT_EQ(check_all_nontrivial_implies_A1(p.verdict, p.reports), PropertyOutcome::VacuouslyTrue);
    EXPECT_FALSE(p.reports[V(p.alg, "5")].trivial_point_note.empty());
}

TEST(Classify, TwoTriangles) {
    auto p = run("example1.qalg");
    for (const auto& r : p.reports) EXPECT_EQ(r.status, VarietyStatus::Nontrivial);
    EXPECT_EQ(p.reports[V(p.alg, "1")].lines_in_variety(), 2u);
    for (const char* v : {"2", "3", "4", "5"}) EXPECT_EQ(p.reports[V(p.alg, v)].lines_in_variety(), 1u) << v;
    EXPECT_EQ(check_all_nontrivial_implies_A1(p.verdict, p.reports), PropertyOutcome::Pass);
}

TEST(Classify, SquareOfLengthSix) {
    auto p = run("example2.qalg");
    EXPECT_EQ(statuses(p), (std::map<std::string, std::string>{
                               {"1", "Nontrivial"}, {"2", "Trivial"}, {"3", "Nontrivial"}, {"4", "Trivial"}}));
    auto fg = fg_consequence_report(p.reports, p.pds);
    EXPECT_TRUE(fg.all_consistent());
    EXPECT_FALSE(fg.negative_evidence());
}

TEST(Classify, LoopAndCycles) {
    auto p = run("example3.qalg");
    for (const auto& r : p.reports) EXPECT_EQ(r.status, VarietyStatus::Nontrivial);
    EXPECT_EQ(p.reports[V(p.alg, "1")].witnesses, std::vector<std::size_t>{0});
    EXPECT_EQ(p.reports[V(p.alg, "2")].witnesses, std::vector<std::size_t>{1});
    EXPECT_EQ(check_all_nontrivial_implies_A1(p.verdict, p.reports), PropertyOutcome::Pass);
}

TEST(Classify, KroneckerBackMismatchesEverywhere) {
    auto p = run("example4.qalg");
    for (const auto& r : p.reports) EXPECT_EQ(r.status, VarietyStatus::Trivial);
    auto fg = fg_consequence_report(p.reports, p.pds);
    ASSERT_EQ(fg.vertices.size(), 2u);
    for (const auto& v : fg.vertices) {
        EXPECT_TRUE(v.trivial_variety);
        EXPECT_FALSE(v.finite_pd);
        EXPECT_FALSE(v.consistent());
    }
    EXPECT_TRUE(fg.negative_evidence());
}

TEST(Implication, FailsWhenANontrivialAlgebraHasLargeA) {
    // Synthetic: every simple nontrivial with A = 2 must be reported as a failure.
    StackedVerdict v;
    v.is_stacked = true;
    v.D = 4;
    v.A = 2;
    SimpleVarietyReport r;
    r.status = VarietyStatus::Nontrivial;
    EXPECT_EQ(check_all_nontrivial_implies_A1(v, {r}), PropertyOutcome::Fail);
    v.A = 1;
    EXPECT_EQ(check_all_nontrivial_implies_A1(v, {r}), PropertyOutcome::Pass);
}

TEST(Classify, TrivialPresentationMakesEverythingTrivial) {
    auto a = load_fixture("example4.qalg");
    HHPresentation empty;
    for (const auto& r : classify_simples(a, empty)) {
        EXPECT_EQ(r.status, VarietyStatus::Trivial);
        EXPECT_EQ(r.lines_in_variety(), 0u);
    }
}
