#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "subcode/bounds.hpp"
#include "subcode/grassmann.hpp"

using namespace subcode;

TEST_CASE("partial spread sizes") {
    CHECK(partial_spread_size(2, 9, 4) == 33);
    CHECK(partial_spread_size(2, 7, 3) == 17);
    CHECK(partial_spread_size(2, 5, 2) == 9);
    CHECK_THROWS_AS(partial_spread_size(2, 8, 4), std::invalid_argument);
    CHECK_THROWS_AS(partial_spread_size(2, 5, 1), std::invalid_argument);
}

TEST_CASE("johnson bound reproduces 289 from A_2(7,6;3) = 17") {
    const BoundsDb db = BoundsDb::seed_table();
    BoundResult r = johnson_bound(2, 8, 6, 4, db);
    CHECK(r.value == 289);
    CHECK(r.method == BoundMethod::johnson);
    CHECK(r.derivation.find("A_2(7,6;3) = 17") != std::string::npos);
}

TEST_CASE("johnson chain bottoms out at the spread value for (2,13,4,3)") {
    const BoundsDb db = BoundsDb::seed_table();
    BoundResult r = johnson_bound(2, 13, 4, 3, db);
    CHECK(r.value == 1597245);
    auto rec = db.lookup(2, 13, 4, 3);
    REQUIRE(rec.has_value());
    CHECK(r.value >= *rec->lower);
    CHECK(r.derivation.find("1597245") != std::string::npos);
    CHECK(r.derivation.find("db records") != std::string::npos);
}

TEST_CASE("johnson chain reaches 1089 for A_2(10,8;5) through the partial-spread base") {
    const BoundsDb db = BoundsDb::seed_table();
    BoundResult r = johnson_bound(2, 10, 8, 5, db);
    CHECK(r.value == 1089);
    auto rec = db.lookup(2, 10, 8, 5);
    REQUIRE(rec.has_value());
    CHECK(r.value == *rec->upper);
    CHECK(r.derivation.find("A_2(9,8;4) = 33") != std::string::npos);
}

TEST_CASE("johnson bound takes the tighter partial-spread value when d = 2k, v = 1 mod k") {
    const BoundsDb db = BoundsDb::seed_table();
    BoundResult r = johnson_bound(2, 5, 4, 2, db);
    CHECK(r.value == 9);
    CHECK(r.method == BoundMethod::partial_spread);
    BoundResult r7 = johnson_bound(2, 7, 6, 3, BoundsDb{});
    CHECK(r7.value == 17);
}

TEST_CASE("degree bound for incidence counts") {
    const BoundsDb db = BoundsDb::seed_table();
    CHECK(degree_bound(2, 8, 6, 4, 7, db) == 17);  // hyperplane: A_2(7,6;4) = A_2(7,6;3)
    CHECK(degree_bound(2, 8, 6, 4, 1, db) == 17);  // point: A_2(7,6;3)
    CHECK(degree_bound(2, 8, 6, 4, 4, db) == 1);   // dim X = k
}

TEST_CASE("double counting bound") {
    CHECK(double_count_bound(2, 8, 4, 7, 17) == 289);
    CHECK(double_count_bound(2, 8, 4, 7, 16) == 272);
    CHECK(double_count_bound(2, 8, 4, 7, 0) == 0);
    CHECK(double_count_bound(2, 8, 4, 1, 17) == 289);  // l <= k branch, same value by symmetry
}

TEST_CASE("one-incidence bound") {
    CHECK(one_incidence_bound(2, 4, 0) == 289);
    CHECK(one_incidence_bound(2, 4, 1) == 272);
    CHECK(one_incidence_bound(2, 3, 0) == 81);
    auto rec = BoundsDb::seed_table().lookup(2, 6, 4, 3);
    REQUIRE(rec.has_value());
    CHECK(*rec->upper == 77);
    CHECK(*rec->upper < one_incidence_bound(2, 3, 0));
}

TEST_CASE("pair threshold is exact rational") {
    mpq_class t34 = pair_threshold(2, 8, 4, 34);
    CHECK(t34 == mpq_class(561, 2));
    CHECK(t34.get_str() == "561/2");
    CHECK(pair_threshold(2, 8, 4, 33) == 272);
    CHECK(pair_threshold(2, 8, 4, 1) == 0);
    CHECK_THROWS_AS(pair_threshold(2, 8, 8, 10), std::invalid_argument);
}

TEST_CASE("johnson cascade: improved 2k-bounds do not propagate") {
    auto floors = [](unsigned q, unsigned k, long improved) {
        // independent evaluation of both floors
        mpz_class q2k1 = 1, qk = 1, qk1 = 1, qkm1 = 1, q2k = 1;
        for (unsigned i = 0; i < 2 * k + 1; ++i) q2k1 *= q;
        for (unsigned i = 0; i < k; ++i) qk *= q;
        for (unsigned i = 0; i < k + 1; ++i) qk1 *= q;
        for (unsigned i = 0; i < k - 1; ++i) qkm1 *= q;
        for (unsigned i = 0; i < 2 * k; ++i) q2k *= q;
        mpz_class lhs_num = (q2k1 - 1) * (q2k - 1);
        mpz_class lhs_den = (qk - 1) * (qkm1 - 1);
        mpz_class rhs_num = (q2k1 - 1) * improved;
        mpz_class rhs_den = qk1 - 1;
        mpz_class lhs, rhs;
        mpz_fdiv_q(lhs.get_mpz_t(), lhs_num.get_mpz_t(), lhs_den.get_mpz_t());
        mpz_fdiv_q(rhs.get_mpz_t(), rhs_num.get_mpz_t(), rhs_den.get_mpz_t());
        return std::make_pair(lhs, rhs);
    };

    CascadeReport r44 = johnson_cascade_check(2, 4, 272);
    auto [l44, h44] = floors(2, 4, 272);
    CHECK(r44.lhs == l44);
    CHECK(r44.rhs == h44);
    CHECK(r44.holds);

    CascadeReport r33 = johnson_cascade_check(2, 3, 77);
    auto [l33, h33] = floors(2, 3, 77);
    CHECK(r33.lhs == l33);
    CHECK(r33.rhs == h33);
    CHECK(r33.holds);

    // the lifted-MRD-plus-one floor itself
    mpz_class floor_case = mpz_class(1 << 8) + 1;
    CascadeReport r4f = johnson_cascade_check(2, 4, floor_case);
    CHECK(r4f.holds);

    CHECK_THROWS_AS(johnson_cascade_check(2, 2, 1000), std::invalid_argument);
    CHECK_THROWS_AS(johnson_cascade_check(2, 4, 100), std::invalid_argument);
}

TEST_CASE("seed records keep lower <= upper and resolve orthogonally") {
    const BoundsDb db = BoundsDb::seed_table();
    auto direct = db.lookup(2, 7, 6, 3);
    auto mirrored = db.lookup(2, 7, 6, 4);
    REQUIRE(direct.has_value());
    REQUIRE(mirrored.has_value());
    CHECK(*direct->upper == *mirrored->upper);
    CHECK(*direct->lower == *mirrored->lower);

    auto mixed = db.lookup(2, 9, 5, std::set<unsigned>{4, 5});
    REQUIRE(mixed.has_value());
    CHECK(*mixed->lower == 65);
    CHECK(*mixed->upper == 66);

    CHECK_THROWS_AS(BoundsDb{}.set(2, 6, 4, {3}, mpz_class(100), mpz_class(50), ""), std::invalid_argument);
}

TEST_CASE("bounds db text format round trips") {
    const BoundsDb db = BoundsDb::seed_table();
    std::ostringstream out;
    db.save(out);
    std::istringstream in(out.str());
    BoundsDb loaded = BoundsDb::load(in);
    CHECK(loaded.size() == db.size());
    std::ostringstream out2;
    loaded.save(out2);
    CHECK(out.str() == out2.str());

    std::istringstream partial("2 11 6 4 ? 3467 # only an upper bound\n");
    BoundsDb p = BoundsDb::load(partial);
    auto rec = p.lookup(2, 11, 6, 4);
    REQUIRE(rec.has_value());
    CHECK_FALSE(rec->lower.has_value());
    CHECK(*rec->upper == 3467);
    CHECK(rec->provenance == "only an upper bound");

    std::istringstream bad("2 11 6\n");
    CHECK_THROWS_AS(BoundsDb::load(bad), std::runtime_error);
}

TEST_CASE("resolve_upper uses exact db entries through the orthogonal key") {
    const BoundsDb db = BoundsDb::seed_table();
    BoundResult r = resolve_upper(2, 7, 6, 4, db);
    CHECK(r.value == 17);
    CHECK(r.method == BoundMethod::db_lookup);
    // trivial cases
    CHECK(resolve_upper(2, 4, 6, 4, db).value == 1);   // d > 2 min(k, v-k)
    CHECK(resolve_upper(2, 5, 2, 2, db).value == gaussian_binomial(5, 2, 2));
    // inexact db uppers cap the recursion
    BoundResult nine = resolve_upper(2, 9, 6, 4, db);
    mpz_class johnson_nine = johnson_bound(2, 9, 6, 4, db).value;
    CHECK(nine.value <= johnson_nine);
}
