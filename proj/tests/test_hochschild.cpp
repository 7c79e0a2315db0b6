#include <gtest/gtest.h>

#include <qalg/hochschild.hpp>
#include <support/fixtures.hpp>

using namespace qalg;
using namespace qalg::testing;

namespace {

HHPresentation presentation(const MonomialAlgebra& a) { return find_generators(a, classify_stacked(a)); }

const TrailGenerator& trail(const HHPresentation& p, std::size_t i) { return std::get<TrailGenerator>(p.generators.at(i)); }

std::map<std::string, std::string> named_support(const MonomialAlgebra& a, const std::map<Path, VertexId>& s) {
    std::map<std::string, std::string> out;
    for (const auto& [p, v] : s) out[a.format(p)] = a.quiver().vertex_name(v);
    return out;
}

std::string repeat(const std::string& word, int times) {
    std::string out;
    for (int i = 0; i < times; ++i) out += (i ? " " : "") + word;
    return out;
}

}  // namespace

TEST(RhoT, QuadraticTwoCycle) {
    auto a = load_fixture("example3.qalg");
    auto rel = rho_T({P(a, "beta"), P(a, "gamma")}, 2);
    EXPECT_EQ(formatted(a, rel), (std::set<std::string>{"beta gamma", "gamma beta"}));
}

TEST(RhoT, FourCycle) {
    auto a = load_fixture("four_cycle_trail.qalg");
    auto rel = rho_T({P(a, "alpha"), P(a, "beta"), P(a, "gamma"), P(a, "delta")}, 2);
    EXPECT_EQ(formatted(a, rel), formatted(a, a.relations()));
}

TEST(RhoT, WrapsWhenDExceedsM) {
    auto a = load_fixture("example2.qalg");
    auto rel = rho_T({P(a, "alpha beta"), P(a, "gamma delta")}, 3);
    EXPECT_EQ(formatted(a, rel), (std::set<std::string>{"alpha beta gamma delta alpha beta",
                                                        "gamma delta alpha beta gamma delta"}));
}

TEST(RhoT, RejectsOpenSegmentLists) {
    auto a = load_fixture("example2.qalg");
    EXPECT_THROW(rho_T({P(a, "alpha beta"), P(a, "delta")}, 2), CompositionError);
}

TEST(Generators, TwoTriangles) {
    auto a = load_fixture("example1.qalg");
    auto p = presentation(a);
    ASSERT_EQ(p.rank(), 2u);
    EXPECT_EQ(p.ring_string(), "K[x,y]/(xy)");
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(degree_of(p.generators[i]), 6u);
        EXPECT_EQ(trail(p, i).m, 3u);
        EXPECT_EQ(trail(p, i).mu, 3u);
    }
    EXPECT_EQ(formatted(a, trail(p, 0).segments), (std::set<std::string>{"alpha", "beta", "gamma"}));
    EXPECT_EQ(formatted(a, trail(p, 1).segments), (std::set<std::string>{"zeta", "eta", "theta"}));
}

TEST(Generators, SquareOfLengthSix) {
    auto a = load_fixture("example2.qalg");
    auto p = presentation(a);
    ASSERT_EQ(p.rank(), 1u);
    EXPECT_EQ(p.ring_string(), "K[x]/()");
    EXPECT_EQ(p.d, 3u);
    EXPECT_EQ(p.A, 2u);
    const auto& t = trail(p, 0);
    EXPECT_EQ(t.degree, 4u);
    EXPECT_EQ(t.m, 2u);
    EXPECT_EQ(formatted(a, t.relations), formatted(a, a.relations()));
}

TEST(Generators, LoopAndCycles) {
    auto a = load_fixture("example3.qalg");
    auto p = presentation(a);
    ASSERT_EQ(p.rank(), 2u);
    EXPECT_EQ(p.ring_string(), "K[x,y]/(xy)");
    const auto* c = std::get_if<ClosedPathGenerator>(&p.generators[0]);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(a.format(c->cycle), "alpha");
    EXPECT_EQ(c->vertex, V(a, "1"));
    EXPECT_EQ(c->degree, 2u);
    EXPECT_TRUE(c->vertex_not_internal);
    const auto& t = trail(p, 1);
    EXPECT_EQ(formatted(a, t.segments), (std::set<std::string>{"beta", "gamma"}));
    EXPECT_EQ(t.degree, 2u);
}

TEST(Generators, KroneckerBackIsTrivial) {
    auto a = load_fixture("example4.qalg");
    auto p = presentation(a);
    EXPECT_TRUE(p.is_trivial_ring());
    EXPECT_EQ(p.ring_string(), "K");
}

TEST(Generators, FourCycle) {
    auto a = load_fixture("four_cycle_trail.qalg");
    auto p = presentation(a);
    ASSERT_EQ(p.rank(), 1u);
    EXPECT_EQ(degree_of(p.generators[0]), 4u);
    EXPECT_EQ(trail(p, 0).m, 4u);
    EXPECT_EQ(base_vertices(p.generators[0]),
              (std::vector<VertexId>{V(a, "1"), V(a, "2"), V(a, "3"), V(a, "4")}));
}

TEST(Generators, NotStackedIsAPrecondition) {
    auto a = load_fixture("nonstacked.qalg");
    try {
        presentation(a);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.code(), "NotStacked");
    }
}

TEST(Generators, ClashingRelationBlocksTheTrail) {
    // The 2-cycle b c would be a trail, but the extra relation a b overlaps its segment b.
    auto a = validate(parse("algebra t\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 2\n"
                            "rel b c\nrel c b\nrel a b\n"));
    auto p = presentation(a);
    EXPECT_TRUE(p.is_trivial_ring());
}

TEST(Generators, RingStringForThree) {
    HHPresentation p;
    p.generators.resize(3);
    EXPECT_EQ(p.ring_string(), "K[x1,x2,x3]/(x1x2,x1x3,x2x3)");
}

TEST(Support, TwoTrianglesSquares) {
    auto a = load_fixture("example1.qalg");
    auto p = presentation(a);
    auto table = chains(a, 6);
    EXPECT_EQ(named_support(a, cocycle_support(a, p.generators[0], table, p.d)),
              (std::map<std::string, std::string>{{repeat("alpha beta gamma", 2), "1"},
                                                  {repeat("beta gamma alpha", 2), "2"},
                                                  {repeat("gamma alpha beta", 2), "3"}}));
    EXPECT_EQ(named_support(a, cocycle_support(a, p.generators[1], table, p.d)),
              (std::map<std::string, std::string>{{repeat("zeta eta theta", 2), "1"},
                                                  {repeat("eta theta zeta", 2), "4"},
                                                  {repeat("theta zeta eta", 2), "5"}}));
}

TEST(Support, SquareCubes) {
    auto a = load_fixture("example2.qalg");
    auto p = presentation(a);
    EXPECT_EQ(named_support(a, cocycle_support(a, p.generators[0], p.d)),
              (std::map<std::string, std::string>{{repeat("alpha beta gamma delta", 3), "1"},
                                                  {repeat("gamma delta alpha beta", 3), "3"}}));
}

TEST(Support, ShallowTableIsRejected) {
    auto a = load_fixture("example2.qalg");
    auto p = presentation(a);
    auto table = chains(a, 3);
    try {
        cocycle_support(a, p.generators[0], table, p.d);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.code(), "ChainsTooShallow");
    }
}

TEST(Invariance, RenamingAndReorderingKeepThePresentation) {
    auto a = load_fixture("example1.qalg");
    // Same algebra with vertices, arrows and relations renamed and declared in another order.
    auto b = validate(parse("algebra renamed\nvertices v5 v4 v3 v2 v1\n"
                            "arrow t v5 v1\narrow e v4 v5\narrow z v1 v4\narrow g v3 v1\narrow b v2 v3\narrow a v1 v2\n"
                            "rel t z\nrel e t\nrel z e\nrel g a\nrel b g\nrel a b\n"));
    auto pa = presentation(a), pb = presentation(b);
    EXPECT_EQ(pa.ring_string(), pb.ring_string());
    std::multiset<std::size_t> da, db;
    for (const auto& g : pa.generators) da.insert(degree_of(g));
    for (const auto& g : pb.generators) db.insert(degree_of(g));
    EXPECT_EQ(da, db);
    auto vb = base_vertices(pb.generators[0]);
    auto vb2 = base_vertices(pb.generators[1]);
    EXPECT_EQ(vb.size() + vb2.size(), 6u);
}
