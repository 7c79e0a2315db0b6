#include <gtest/gtest.h>

#include <qalg/parser.hpp>
#include <support/fixtures.hpp>

using namespace qalg;
using namespace qalg::testing;

namespace {

struct Diagnostic {
    std::string code;
    std::size_t line;
    std::size_t column;
};

Diagnostic diagnose(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return {e.code(), e.line(), e.column()};
    }
    ADD_FAILURE() << "no diagnostic for:\n" << text;
    return {};
}

void expect_diag(const std::string& text, const std::string& code, std::size_t line, std::size_t column) {
    auto d = diagnose(text);
    EXPECT_EQ(d.code, code) << text;
    EXPECT_EQ(d.line, line) << text;
    EXPECT_EQ(d.column, column) << text;
}

}  // namespace

TEST(Parse, FourCycleFixture) {
    auto spec = parse(read_fixture("four_cycle_trail.qalg"));
    EXPECT_EQ(spec.name, "four_cycle_trail");
    EXPECT_EQ(spec.quiver.vertex_count(), 6u);
    EXPECT_EQ(spec.quiver.arrow_count(), 6u);
    ASSERT_EQ(spec.relations.size(), 4u);
    for (const auto& r : spec.relations) EXPECT_EQ(r.size(), 2u);
    EXPECT_EQ(spec.relations[0], (std::vector<std::string>{"alpha", "beta"}));
    EXPECT_EQ(spec.relations[3], (std::vector<std::string>{"delta", "alpha"}));
}

TEST(Parse, CommentsBlankLinesAndSplitVertexLines) {
    auto spec = parse("# header comment\n\nalgebra t  # trailing\nvertices 1\nvertices 2 x_3\n\n"
                      "arrow a 1 2\narrow b 2 x_3\nrel a b\n");
    EXPECT_EQ(spec.quiver.vertex_count(), 3u);
    EXPECT_EQ(spec.relations.size(), 1u);
}

TEST(Parse, NoTrailingNewline) {
    auto spec = parse("algebra t\nvertices 1\narrow a 1 1\nrel a a");
    EXPECT_EQ(spec.relations.size(), 1u);
}

TEST(Diagnostics, Lexical) { expect_diag("algebra t\nvertices 1 $x\n", parse_code::lexical, 2, 12); }

TEST(Diagnostics, MissingHeader) { expect_diag("vertices 1\n", parse_code::syntax, 1, 1); }

TEST(Diagnostics, UnknownKeyword) { expect_diag("algebra t\nvertices 1\n  edge a 1 1\n", parse_code::syntax, 3, 3); }

TEST(Diagnostics, UnknownVertex) {
    expect_diag("algebra t\nvertices 1 2\narrow a 1 3\n", parse_code::unknown_vertex, 3, 11);
}

TEST(Diagnostics, UnknownArrow) {
    expect_diag("algebra t\nvertices 1\narrow a 1 1\nrel a b\n", parse_code::unknown_arrow, 4, 7);
}

TEST(Diagnostics, CompositionFailsAtJunctionOne) {
    const std::string text = "algebra t\nvertices 1 2\narrow alpha 1 2\nrel alpha alpha\n";
    expect_diag(text, parse_code::not_composable, 4, 11);
    try {
        parse(text);
    } catch (const ParseError& e) {
        EXPECT_NE(e.message().find("junction 1"), std::string::npos) << e.message();
    }
}

TEST(Diagnostics, ShortRelation) {
    expect_diag("algebra t\nvertices 1\narrow a 1 1\nrel a\n", parse_code::short_relation, 4, 1);
}

TEST(Diagnostics, DuplicateNames) {
    expect_diag("algebra t\nvertices 1 1\n", parse_code::duplicate_name, 2, 12);
    expect_diag("algebra t\nvertices 1\narrow a 1 1\narrow a 1 1\n", parse_code::duplicate_name, 4, 7);
}

TEST(Diagnostics, DuplicateRelation) {
    expect_diag("algebra t\nvertices 1\narrow a 1 1\nrel a a\nrel a a\n", parse_code::duplicate_relation, 5, 1);
}

TEST(Diagnostics, EmptyVertexList) {
    expect_diag("algebra t\nvertices\n", parse_code::no_vertices, 2, 1);
    try {
        parse("algebra t\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.code(), parse_code::no_vertices);
        EXPECT_EQ(e.message(), "at least one vertex required");
    }
}

TEST(Print, CanonicalForm) {
    auto spec = parse("algebra t\nvertices 10 2 b a 1\narrow x 1 2\narrow w 2 1\nrel x w\n");
    EXPECT_EQ(print(spec), "algebra t\nvertices 1 2 10 a b\narrow x 1 2\narrow w 2 1\nrel x w\n");
}

class FixtureRoundTrip : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureRoundTrip, StructuralAndByteLevel) {
    auto spec = parse(read_fixture(GetParam()));
    const std::string once = print(spec);
    EXPECT_EQ(once, print(spec));
    auto again = parse(once);
    EXPECT_TRUE(structurally_equal(spec, again));
    EXPECT_EQ(print(again), once);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureRoundTrip, ::testing::ValuesIn(fixture_names()),
                         [](const auto& info) {
                             std::string n = info.param;
                             return n.substr(0, n.find('.'));
                         });
