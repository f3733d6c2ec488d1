#include <doctest.h>

#include <random>

#include "qcol/alexander.hpp"
#include "qcol/census.hpp"
#include "qcol/count.hpp"
#include "qcol/reduce.hpp"
#include "testutil.hpp"

using namespace qcol;
using qcol::test::P;

namespace {

const KnotDiagram& bundled(const char* name) {
    const CensusEntry* e = test::census().lookup(name, CensusKind::diagram);
    REQUIRE(e != nullptr);
    return *e->diagram;
}

ColouringMatrix matrix_of(const char* name) { return build_colouring_matrix(bundled(name)); }

}  // namespace

TEST_CASE("elementary ops are involutions where expected") {
    const ColouringMatrix a = matrix_of("4_1");
    ColouringMatrix b = apply_op(a, ElementaryOp::scale(0, ScaleUnit::minus_one));
    CHECK(b != a);
    CHECK(apply_op(b, ElementaryOp::scale(0, ScaleUnit::minus_one)) == a);

    b = apply_op(a, ElementaryOp::swap_cols(1, 3));
    CHECK(b.column_labels() == std::vector<int>{1, 4, 3, 2});
    CHECK(apply_op(b, ElementaryOp::swap_cols(1, 3)) == a);

    b = apply_op(a, ElementaryOp::scale(2, ScaleUnit::m));
    CHECK(apply_op(b, ElementaryOp::scale(2, ScaleUnit::m_inv)) == a);
}

TEST_CASE("add_row keeps row sums at zero") {
    const ColouringMatrix a = matrix_of("4_1");
    const ColouringMatrix b = apply_op(a, ElementaryOp::add(1, 0));
    CHECK(b.row_sums_zero());
    CHECK(b.at(0, 1) == a.at(0, 1) + a.at(1, 1));
}

TEST_CASE("ops reject bad indices") {
    const ColouringMatrix a = matrix_of("3_1");
    CHECK_THROWS_AS(apply_op(a, ElementaryOp::add(0, 3)), std::out_of_range);
    CHECK_THROWS_AS(apply_op(a, ElementaryOp::swap_rows(-1, 0)), std::out_of_range);
    CHECK_THROWS_AS(apply_op(a, ElementaryOp::add(1, 1)), std::out_of_range);
}

TEST_CASE("random op sequences preserve row sums and solution counts") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> size_dist(2, 4);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = size_dist(rng);
        ColouringMatrix a = test::random_row_sum_zero_matrix(rng, n);
        ColouringMatrix b = a;
        std::uniform_int_distribution<int> kind(0, 3), row(0, n - 1), unit(0, 2);
        for (int step = 0; step < 12; ++step) {
            ElementaryOp op = ElementaryOp::scale(0, ScaleUnit::m);
            switch (kind(rng)) {
                case 0:
                    op = ElementaryOp::scale(row(rng), static_cast<ScaleUnit>(unit(rng)));
                    break;
                case 1: {
                    int i = row(rng), j = row(rng);
                    if (i == j) continue;
                    op = ElementaryOp::add(i, j);
                    break;
                }
                case 2:
                    op = ElementaryOp::swap_rows(row(rng), row(rng));
                    break;
                case 3:
                    op = ElementaryOp::swap_cols(row(rng), row(rng));
                    break;
            }
            b = apply_op(b, op);
            CHECK(b.row_sums_zero());
        }
        for (long long nn : {2, 3, 5, 8, 12}) {
            for (long long mm = 1; mm < nn; ++mm) {
                if (std::gcd(mm, nn) != 1) continue;
                const QuandleSpec q(nn, mm);
                CHECK(test::solution_count_by_enumeration(evaluate_matrix(a, q)) ==
                      test::solution_count_by_enumeration(evaluate_matrix(b, q)));
            }
        }
    }
}

TEST_CASE("classify recognizes the displayed templates") {
    // type I template with constant alpha
    ColouringMatrix t1(3);
    t1.at(0, 0) = P("1");
    t1.at(0, 2) = P("-1");
    t1.at(1, 1) = P("5");
    t1.at(1, 2) = P("-5");
    CHECK(classify(t1) == Classification::type_one);

    // type II template with alpha1=2, beta1=3, alpha2=5
    ColouringMatrix t2(3);
    t2.at(0, 0) = P("2");
    t2.at(0, 1) = P("3");
    t2.at(0, 2) = P("-5");
    t2.at(1, 1) = P("5");
    t2.at(1, 2) = P("-5");
    CHECK(classify(t2) == Classification::type_two);

    // violating the zero final row
    ColouringMatrix bad(2);
    bad.at(0, 0) = P("1");
    bad.at(0, 1) = P("-1");
    bad.at(1, 0) = P("m");
    bad.at(1, 1) = P("-m");
    CHECK(classify(bad) == Classification::unreduced);

    // the 2x2-diagonal template is type II structurally (strongest label)
    ColouringMatrix d23(3);
    d23.at(0, 0) = P("2");
    d23.at(0, 1) = P("-2");
    d23.at(1, 1) = P("3");
    d23.at(1, 2) = P("-3");
    CHECK(classify(d23) == Classification::type_two);

    // general triangular: non-unit diagonal before the two interesting rows
    ColouringMatrix gt(4);
    gt.at(0, 0) = P("2");
    gt.at(0, 1) = P("-2");
    gt.at(1, 1) = P("3");
    gt.at(1, 3) = P("-3");
    gt.at(2, 2) = P("5");
    gt.at(2, 3) = P("-5");
    CHECK(classify(gt) == Classification::general_triangular);
}

TEST_CASE("reduce 4_1 to type I with the right alpha") {
    const ReducedForm r = reduce_matrix(matrix_of("4_1"));
    REQUIRE(r.classification == Classification::type_one);
    CHECK(unit_equal(r.alpha, P("1-3*m+m^2")));
    CHECK(r.alpha == P("1-3*m+m^2"));  // interesting row is normalized
    CHECK(replay(matrix_of("4_1"), r.op_log) == r.matrix);
}

TEST_CASE("reduce every bundled type I diagram") {
    for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1", "8_20"}) {
        CAPTURE(name);
        const ReducedForm r = reduce_matrix(matrix_of(name));
        REQUIRE(r.classification == Classification::type_one);
        const CensusEntry* t = test::census().lookup(name, CensusKind::type_one);
        REQUIRE(t != nullptr);
        CHECK(r.alpha == t->type_one->alex);
    }
}

TEST_CASE("reduce 8_18 to type II whose counts match the table data") {
    const ReducedForm r = reduce_matrix(matrix_of("8_18"));
    REQUIRE(r.classification == Classification::type_two);
    const CensusEntry* t = test::census().lookup("8_18", CensusKind::type_two);
    REQUIRE(t != nullptr);
    for (const QuandleSpec& q : test::quandles_up_to(15)) {
        CHECK(count_type_two(r.alpha1, r.beta1, r.alpha2, q).count ==
              count_type_two(t->type_two->alpha1, t->type_two->beta1, t->type_two->alpha2, q)
                  .count);
    }
}

TEST_CASE("reduce 9_46 to type II whose counts match the table data") {
    const ReducedForm r = reduce_matrix(matrix_of("9_46"));
    REQUIRE(r.classification == Classification::type_two);
    const CensusEntry* t = test::census().lookup("9_46", CensusKind::type_two);
    REQUIRE(t != nullptr);
    for (const QuandleSpec& q : test::quandles_up_to(12)) {
        CHECK(count_type_two(r.alpha1, r.beta1, r.alpha2, q).count ==
              count_type_two(t->type_two->alpha1, t->type_two->beta1, t->type_two->alpha2, q)
                  .count);
    }
}

TEST_CASE("reduce 9_35 to a simplified block, never a triangular form") {
    const ReducedForm r = reduce_matrix(matrix_of("9_35"));
    REQUIRE(r.classification == Classification::simplified_block);
    // counts agree with the printed block on sampled quandles
    const CensusEntry* b = test::census().lookup("9_35", CensusKind::block);
    REQUIRE(b != nullptr);
    for (const QuandleSpec& q : test::quandles_up_to(8)) {
        CHECK(count_block_brute(r, q).count == count_block_brute(b->block->block, q).count);
    }
    CHECK(replay(matrix_of("9_35"), r.op_log) == r.matrix);
}

TEST_CASE("diagonal products of triangular reductions are unit-equal to Alexander") {
    for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1", "8_18", "8_20", "9_46"}) {
        CAPTURE(name);
        const ColouringMatrix a = matrix_of(name);
        const ReducedForm r = reduce_matrix(a);
        REQUIRE(r.classification != Classification::unreduced);
        if (r.classification == Classification::simplified_block) continue;
        LaurentPoly prod(1);
        for (int i = 0; i + 1 < r.matrix.size(); ++i) prod *= r.matrix.at(i, i);
        CHECK(unit_equal(prod, alexander_from_matrix(a).poly));
    }
}

TEST_CASE("reduction is deterministic and its log replays") {
    for (const char* name : {"4_1", "8_18", "9_35"}) {
        CAPTURE(name);
        const ColouringMatrix a = matrix_of(name);
        const ReducedForm r1 = reduce_matrix(a);
        const ReducedForm r2 = reduce_matrix(a);
        CHECK(r1.op_log == r2.op_log);
        CHECK(r1.matrix == r2.matrix);
        CHECK(replay(a, r1.op_log) == r1.matrix);
    }
}

TEST_CASE("budget exhaustion reports unreduced with a consistent partial state") {
    const ColouringMatrix a = matrix_of("8_18");
    const ReducedForm r = reduce_matrix(a, 7);
    CHECK(r.budget_exhausted);
    CHECK(r.classification == Classification::unreduced);
    CHECK(static_cast<int>(r.op_log.size()) <= 7);
    CHECK(replay(a, r.op_log) == r.matrix);
}

TEST_CASE("op log text round trip") {
    const ReducedForm r = reduce_matrix(matrix_of("5_2"));
    const std::string text = serialize_op_log(r.op_log);
    CHECK(parse_op_log(text) == r.op_log);
    CHECK(text.find("scale r") != std::string::npos);
}

TEST_CASE("op log parser rejects malformed traces") {
    CHECK_THROWS_AS(parse_op_log("scale r1 m^2"), parse_error);
    CHECK_THROWS_AS(parse_op_log("add r1"), parse_error);
    CHECK_THROWS_AS(parse_op_log("frobnicate 1 2"), parse_error);
    CHECK(parse_op_log("").empty());
}

TEST_CASE("one-crossing unknot reduces to the degenerate type I form") {
    const KnotDiagram d("unknot", {{1, CrossingSign::negative, 1}});
    const ReducedForm r = reduce_matrix(build_colouring_matrix(d));
    CHECK(r.classification == Classification::type_one);
    CHECK(r.alpha == P("1"));
    CHECK(count_auto(r, QuandleSpec(7, 3)).count == 7);
}

TEST_CASE("reduce is stable on already-shaped census forms") {
    const Census& c = test::census();
    int seen = 0;
    for (const CensusEntry& e : c.entries()) {
        if (e.kind == CensusKind::diagram) continue;
        if (e.kind == CensusKind::type_one && ++seen % 10 != 0) continue;  // sample
        CAPTURE(e.name);
        const ColouringMatrix a = canonical_matrix(e);
        const ReducedForm r = reduce_matrix(a);
        CHECK(r.classification != Classification::unreduced);
        CHECK(replay(a, r.op_log) == r.matrix);
        for (const QuandleSpec& q : {QuandleSpec(3, 2), QuandleSpec(8, 5)}) {
            CHECK(count_snf_oracle(a, q).count == count_snf_oracle(r.matrix, q).count);
            CHECK(count_auto(r, q).count == count_snf_oracle(a, q).count);
        }
    }
}

TEST_CASE("reduce survives arbitrary formal crossing lists") {
    // any formal (sign, over_arc) list is legal input; such matrices need not
    // admit the zero-row kernel step or any triangular form
    std::mt19937_64 rng(90210);
    for (int iter = 0; iter < 30; ++iter) {
        std::uniform_int_distribution<int> size_dist(3, 10);
        const int n = size_dist(rng);
        std::uniform_int_distribution<int> arc(1, n), coin(0, 1);
        std::vector<Crossing> crossings;
        for (int k = 1; k <= n; ++k)
            crossings.push_back(
                {k, coin(rng) ? CrossingSign::positive : CrossingSign::negative, arc(rng)});
        const ColouringMatrix a = build_colouring_matrix(KnotDiagram("fuzz", crossings));
        const ReducedForm r = reduce_matrix(a);
        CHECK(r.matrix.row_sums_zero());
        CHECK(replay(a, r.op_log) == r.matrix);
        for (const QuandleSpec& q : {QuandleSpec(3, 2), QuandleSpec(7, 3)}) {
            CHECK(count_snf_oracle(a, q).count == count_snf_oracle(r.matrix, q).count);
        }
    }
}

TEST_CASE("reduce_matrix rejects matrices violating row sums") {
    ColouringMatrix bad(2);
    bad.at(0, 0) = P("1");
    CHECK_THROWS_AS(reduce_matrix(bad), std::invalid_argument);
}
