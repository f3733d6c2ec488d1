#include <doctest.h>

#include <fstream>

#include "qcol/diagram.hpp"
#include "testutil.hpp"

using namespace qcol;

namespace {

const char* kTrefoil = R"(# verified trefoil
knot 3_1
crossings 3
+ 3
+ 1
+ 2
)";

}  // namespace

TEST_CASE("parse a census diagram") {
    const KnotDiagram d = KnotDiagram::parse(kTrefoil);
    CHECK(d.name() == "3_1");
    CHECK(d.size() == 3);
    CHECK(d.crossings()[0].sign == CrossingSign::positive);
    CHECK(d.crossings()[0].over_arc == 3);
    CHECK(d.crossings()[2].over_arc == 2);
    CHECK(validate_diagram(d).empty());
}

TEST_CASE("the verbose 'over' keyword is accepted") {
    const KnotDiagram d = KnotDiagram::parse("knot k\ncrossings 2\n+ over 2\n- 1\n");
    CHECK(d.crossings()[0].over_arc == 2);
    CHECK_THROWS_AS(KnotDiagram::parse("knot k\ncrossings 4\n+ over 5\n+ 1\n+ 1\n+ 1\n"),
                    parse_error);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(KnotDiagram::parse("knot k\ncrossings 4\n+ 5\n+ 1\n+ 1\n+ 1\n"),
                         doctest::Contains("line 3"), parse_error);
    CHECK_THROWS_AS(KnotDiagram::parse("knot k\ncrossings 0\n"), parse_error);
    CHECK_THROWS_AS(KnotDiagram::parse("knot k\ncrossings 2\n+ 1\n"), parse_error);
    CHECK_THROWS_AS(KnotDiagram::parse("knot k\ncrossings 1\n? 1\n"), parse_error);
    CHECK_THROWS_AS(KnotDiagram::parse(""), parse_error);
}

TEST_CASE("validation reports each violation") {
    KnotDiagram dup("bad", {{1, CrossingSign::positive, 1},
                            {2, CrossingSign::positive, 1},
                            {2, CrossingSign::negative, 1}});
    const auto v1 = validate_diagram(dup);
    REQUIRE(v1.size() == 1);
    CHECK(v1.front().find("index") != std::string::npos);

    KnotDiagram bad_arc("bad2", {{1, CrossingSign::positive, 0}});
    const auto v2 = validate_diagram(bad_arc);
    REQUIRE(v2.size() == 1);
    CHECK(v2.front().find("over arc") != std::string::npos);
}

TEST_CASE("serialize then parse is the identity") {
    const KnotDiagram d = KnotDiagram::parse(kTrefoil);
    const KnotDiagram d2 = KnotDiagram::parse(d.serialize());
    CHECK(d2.name() == d.name());
    REQUIRE(d2.size() == d.size());
    for (int i = 0; i < d.size(); ++i) {
        CHECK(d2.crossings()[i].sign == d.crossings()[i].sign);
        CHECK(d2.crossings()[i].over_arc == d.crossings()[i].over_arc);
    }
}

TEST_CASE("every bundled census diagram validates") {
    const auto diagrams = test::census().of_kind(CensusKind::diagram);
    CHECK(diagrams.size() == 9);
    for (const CensusEntry* e : diagrams) {
        CAPTURE(e->name);
        CHECK(validate_diagram(*e->diagram).empty());
        // round trip through the text format
        const KnotDiagram again = KnotDiagram::parse(e->diagram->serialize());
        CHECK(again.serialize() == e->diagram->serialize());
    }
}
