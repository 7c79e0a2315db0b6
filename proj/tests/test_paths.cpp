#include <gtest/gtest.h>

#include <qalg/overlaps.hpp>
#include <support/fixtures.hpp>

using namespace qalg;
using namespace qalg::testing;

namespace {

const MonomialAlgebra& cycle() {
    static const MonomialAlgebra alg = load_fixture("four_cycle_trail.qalg");
    return alg;
}

const MonomialAlgebra& square() {
    static const MonomialAlgebra alg = load_fixture("example2.qalg");
    return alg;
}

Quiver one_loop() {
    Quiver q;
    q.add_vertex("1");
    q.add_arrow("alpha", 0, 0);
    return q;
}

}  // namespace

TEST(Compose, TrivialPathIsIdentity) {
    const auto& a = cycle();
    Path p = P(a, "alpha beta");
    EXPECT_EQ(compose(E(a, "1"), p), p);
    EXPECT_EQ(compose(p, E(a, "3")), p);
}

TEST(Compose, LengthsAndEndpoints) {
    const auto& a = cycle();
    Path ab = compose(P(a, "alpha"), P(a, "beta"));
    EXPECT_EQ(ab.length(), 2u);
    EXPECT_EQ(ab, P(a, "alpha beta"));
    EXPECT_EQ(ab.origin(), V(a, "1"));
    EXPECT_EQ(ab.terminus(), V(a, "3"));
}

TEST(Compose, MismatchNamesBothPaths) {
    const auto& a = cycle();
    try {
        compose(a.quiver(), P(a, "beta"), P(a, "beta"));
        FAIL() << "expected CompositionError";
    } catch (const CompositionError& e) {
        std::string what = e.what();
        EXPECT_NE(what.find("beta"), std::string::npos);
    }
    EXPECT_THROW(compose(E(a, "1"), P(a, "beta")), CompositionError);
}

TEST(Path, FromNamesRejectsGaps) {
    const auto& a = cycle();
    EXPECT_THROW(P(a, "alpha gamma"), CompositionError);
    EXPECT_THROW(P(a, "alpha nosuch"), UnknownNameError);
}

TEST(Path, OrderingIsStructural) {
    const auto& a = cycle();
    EXPECT_EQ(P(a, "alpha beta"), P(a, "alpha beta"));
    EXPECT_NE(P(a, "alpha beta"), P(a, "beta gamma"));
    EXPECT_LT(P(a, "alpha"), P(a, "alpha beta"));
}

TEST(Overlaps, SharedArrow) {
    const auto& a = cycle();
    auto ws = proper_overlaps(P(a, "alpha beta"), P(a, "beta gamma"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].shared, P(a, "beta"));
    EXPECT_EQ(ws[0].u, P(a, "gamma"));
    EXPECT_EQ(ws[0].v, P(a, "alpha"));
    EXPECT_FALSE(ws[0].u_trivial);
}

TEST(Overlaps, DisjointArrowsGiveNothing) {
    const auto& a = cycle();
    EXPECT_TRUE(proper_overlaps(P(a, "alpha beta"), P(a, "gamma delta")).empty());
}

TEST(Overlaps, LongRelationsShareFourArrows) {
    const auto& a = square();
    auto ws = proper_overlaps(P(a, "gamma delta alpha beta gamma delta"), P(a, "alpha beta gamma delta alpha beta"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_EQ(ws[0].shared_length, 4u);
    EXPECT_EQ(ws[0].shared, P(a, "alpha beta gamma delta"));
    EXPECT_EQ(ws[0].u, P(a, "alpha beta"));
}

TEST(Overlaps, SuffixWitnessHasTrivialU) {
    const auto& a = square();
    auto ws = proper_overlaps(P(a, "alpha beta gamma"), P(a, "beta gamma"));
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_TRUE(ws[0].u_trivial);
    EXPECT_TRUE(have_overlap(P(a, "alpha beta gamma"), P(a, "beta gamma")));
}

TEST(Overlaps, SymmetricPredicate) {
    const auto& a = square();
    EXPECT_TRUE(have_overlap(P(a, "gamma delta"), P(a, "alpha beta gamma")));
    EXPECT_TRUE(have_overlap(P(a, "alpha beta gamma"), P(a, "gamma delta")));
    EXPECT_TRUE(have_overlap(P(a, "beta"), P(a, "alpha beta gamma")));
    EXPECT_FALSE(have_overlap(P(a, "alpha beta"), P(a, "gamma delta")));
}

TEST(Rotations, FourCycle) {
    const auto& a = cycle();
    auto rs = rotations(P(a, "alpha beta gamma delta"));
    std::vector<Path> want{P(a, "alpha beta gamma delta"), P(a, "beta gamma delta alpha"),
                           P(a, "gamma delta alpha beta"), P(a, "delta alpha beta gamma")};
    EXPECT_EQ(rs, want);
}

TEST(Rotations, LoopAndOpenPath) {
    Quiver q = one_loop();
    Path loop = Path::arrow(q, 0);
    EXPECT_EQ(rotations(loop), std::vector<Path>{loop});
    EXPECT_THROW(rotations(P(cycle(), "alpha beta")), NotClosedError);
}

TEST(Primitive, Examples) {
    Quiver q = one_loop();
    Path loop = Path::arrow(q, 0);
    EXPECT_TRUE(is_primitive(loop));
    EXPECT_FALSE(is_primitive(power(loop, 2)));
    EXPECT_TRUE(is_primitive(P(cycle(), "alpha beta gamma delta")));
    EXPECT_FALSE(is_primitive(power(P(cycle(), "alpha beta gamma delta"), 3)));
    EXPECT_THROW(is_primitive(P(cycle(), "alpha")), NotClosedError);
}

TEST(VertexNotInternal, Examples) {
    const auto& a = cycle();
    EXPECT_TRUE(vertex_not_internal(P(a, "alpha beta gamma delta"), V(a, "1")));
    Quiver q = one_loop();
    Path loop = Path::arrow(q, 0);
    EXPECT_TRUE(vertex_not_internal(loop, 0));
    EXPECT_FALSE(vertex_not_internal(power(loop, 3), 0));
    EXPECT_THROW(vertex_not_internal(P(a, "alpha beta gamma delta"), V(a, "2")), NotClosedError);
}

TEST(Quiver, Components) {
    const auto& a = cycle();
    EXPECT_EQ(a.quiver().components().size(), 1u);
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    EXPECT_EQ(q.components().size(), 2u);
}
