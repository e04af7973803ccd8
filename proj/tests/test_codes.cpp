#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"

#include <sstream>

#include "subcode/bounds.hpp"
#include "subcode/constructions.hpp"

using namespace subcode;
using testsupport::random_subspace;

namespace {

const SubspaceCode& the_17_code() {
    static SubspaceCode code = plus_one(lifted_mrd_code(2, 7, 3, 1));
    return code;
}

const SubspaceCode& the_257_code() {
    static SubspaceCode code = plus_one(lifted_mrd_code(2, 8, 4, 2));
    return code;
}

SubspaceCode random_code(std::mt19937_64& rng, unsigned q, unsigned v, unsigned k, std::size_t n) {
    std::vector<Subspace> words;
    std::set<std::size_t> seen;
    while (words.size() < n) {
        Subspace s = random_subspace(rng, q, v, k);
        if (seen.insert(s.hash_value()).second) words.push_back(s);
    }
    return SubspaceCode::from_subspaces(FieldSpec(q), v, std::move(words));
}

Subspace point_of(unsigned v, unsigned coord) {
    MatRows m(FieldSpec(2), 1, v);
    m.set(0, coord, 1);
    return Subspace(std::move(m));
}

}  // namespace

TEST_CASE("verify confirms the constructed (7,17,6;3)_2 code") {
    ClaimSpec claim;
    claim.size = 17;
    claim.distance = 6;
    claim.dims = std::set<unsigned>{3};
    VerifyReport rep = verify(the_17_code(), claim);
    CHECK(rep.size == 17);
    CHECK(*rep.min_distance == 6);
    CHECK(rep.constant_dimension);
    CHECK(rep.claim_ok);
}

TEST_CASE("verify reports an undefined distance for a single codeword") {
    std::mt19937_64 rng(3);
    SubspaceCode code = SubspaceCode::from_subspaces(FieldSpec(2), 5, {random_subspace(rng, 2, 5, 2)});
    VerifyReport rep = verify(code);
    CHECK(rep.size == 1);
    CHECK_FALSE(rep.min_distance.has_value());
}

TEST_CASE("verify minimum distance equals the naive pairwise oracle") {
    std::mt19937_64 rng(41);
    Grassmannian lines(FieldSpec(2), 4, 2);
    std::vector<Subspace> all = lines.materialize();
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Subspace> pick;
        std::set<std::uint64_t> used;
        while (pick.size() < 10) {
            std::uint64_t i = rng() % all.size();
            if (used.insert(i).second) pick.push_back(all[i]);
        }
        SubspaceCode code = SubspaceCode::from_subspaces(FieldSpec(2), 4, pick);
        unsigned naive = 100;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            for (std::size_t j = i + 1; j < pick.size(); ++j) {
                naive = std::min(naive, testsupport::naive_distance(pick[i], pick[j]));
            }
        }
        CHECK(*code.min_distance() == naive);
    }
}

TEST_CASE("duplicate codewords are rejected") {
    std::mt19937_64 rng(4);
    Subspace s = random_subspace(rng, 2, 5, 2);
    CHECK_THROWS_AS(SubspaceCode::from_subspaces(FieldSpec(2), 5, {s, s}), std::invalid_argument);
}

TEST_CASE("dimension distribution rendering") {
    CHECK(dimension_distribution(SubspaceCode(FieldSpec(2), 7)).render().empty());

    std::vector<Subspace> first17(the_257_code().codewords().begin(), the_257_code().codewords().begin() + 17);
    SubspaceCode seventeen_solids = SubspaceCode::from_subspaces(FieldSpec(2), 8, std::move(first17));
    CHECK(dimension_distribution(seventeen_solids).render() == "4^17");

    // a mixed 17+17 set renders ascending by dimension
    std::vector<Subspace> mixed = the_17_code().codewords();
    const SubspaceCode dualized = orthogonal_code(the_17_code());
    for (const Subspace& s : dualized.codewords()) mixed.push_back(s);
    SubspaceCode mixed_code = SubspaceCode::from_subspaces(FieldSpec(2), 7, std::move(mixed));
    CHECK(dimension_distribution(mixed_code).render() == "3^17 4^17");
}

TEST_CASE("orthogonal code swaps parameters and preserves the distance") {
    SubspaceCode dualized = orthogonal_code(the_17_code());
    VerifyReport rep = verify(dualized);
    CHECK(rep.size == 17);
    CHECK(*rep.min_distance == 6);
    CHECK(rep.dims == std::set<unsigned>{4});

    CHECK(orthogonal_code(dualized).codewords() == the_17_code().codewords());

    std::mt19937_64 rng(50);
    SubspaceCode random20 = random_code(rng, 2, 6, 3, 20);
    SubspaceCode random20_dual = orthogonal_code(random20);
    unsigned naive = 100;
    const auto& words = random20_dual.codewords();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            naive = std::min(naive, testsupport::naive_distance(words[i], words[j]));
        }
    }
    CHECK(*random20.min_distance() == naive);
}

TEST_CASE("incidence sets") {
    const SubspaceCode code = the_17_code();
    Subspace full = Subspace::from_rows([] {
        MatRows m(FieldSpec(2), 7, 7);
        for (unsigned i = 0; i < 7; ++i) m.set(i, i, 1);
        return m;
    }());
    CHECK(incidence_set(code, full).size() == code.size());
    Subspace zero(MatRows(FieldSpec(2), 0, 7));
    CHECK(incidence_set(code, zero).size() == code.size());
}

TEST_CASE("every point of PG(7,2) meets at most 17 codewords of the 257-code") {
    const SubspaceCode code = the_257_code();
    Grassmannian points(FieldSpec(2), 8, 1);
    std::size_t max_seen = 0;
    std::size_t total = 0;
    points.for_each([&](const Subspace& p) {
        std::size_t count = incidence_set(code, p).size();
        max_seen = std::max(max_seen, count);
        total += count;
    });
    CHECK(max_seen <= 17);
    CHECK(total == 257 * 15);  // every solid carries 15 points
}

TEST_CASE("incidence profile") {
    const SubspaceCode code = the_17_code();
    IncidenceProfile at_zero = incidence_profile(code, 0);
    CHECK(at_zero.max == code.size());
    IncidenceProfile at_k = incidence_profile(code, 3);
    CHECK(at_k.max == 1);

    IncidenceProfile hyper = incidence_profile(the_257_code(), 7);
    CHECK(hyper.max <= 17);
}

TEST_CASE("incidence profile maxima respect the degree bound") {
    const BoundsDb db = BoundsDb::seed_table();
    const SubspaceCode code = the_17_code();
    for (unsigned l : {1u, 2u, 5u, 6u}) {
        IncidenceProfile prof = incidence_profile(code, l);
        CHECK(mpz_class(static_cast<unsigned long>(prof.max)) <= degree_bound(2, 7, 6, 3, l, db));
    }
}

TEST_CASE("shorten on an avoiding code gives the empty code") {
    // a single plane through neither the point nor inside the hyperplane
    Subspace plane = Subspace::from_rows([] {
        MatRows m(FieldSpec(2), 3, 6);
        m.set(0, 0, 1);
        m.set(0, 1, 1);  // row 110000: misses e1, not inside x1=0
        m.set(1, 2, 1);
        m.set(2, 3, 1);
        return m;
    }());
    SubspaceCode code = SubspaceCode::from_subspaces(FieldSpec(2), 6, {plane});
    Subspace p = point_of(6, 0);
    Subspace h = dual(p);  // x1 = 0
    SubspaceCode shortened = shorten(code, p, h);
    CHECK(shortened.size() == 0);
}

TEST_CASE("shorten the 257-code: size additivity and verified parameters") {
    const SubspaceCode code = the_257_code();
    Subspace p = point_of(8, 0);
    Subspace h = dual(p);
    const std::size_t through = incidence_set(code, p).size();
    const std::size_t inside = incidence_set(code, h).size();
    SubspaceCode shortened = shorten(code, p, h);
    CHECK(shortened.size() == through + inside);
    CHECK(shortened.ambient() == 7);
    VerifyReport rep = verify(shortened);
    CHECK(*rep.min_distance >= 5);
    for (unsigned d : rep.dims) CHECK((d == 3 || d == 4));
}

TEST_CASE("shorten contract on random constant-dimension codes") {
    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned v = trial % 2 ? 6 : 7;
        unsigned k = 2 + rng() % 2;
        SubspaceCode code = random_code(rng, 2, v, k, 6 + rng() % 10);
        Subspace p = point_of(v, rng() % v);
        // any hyperplane missing p: dualize a point with nonzero dot against p
        Subspace h = dual(p);
        const std::size_t through = incidence_set(code, p).size();
        const std::size_t inside = incidence_set(code, h).size();
        SubspaceCode shortened = shorten(code, p, h);
        CHECK(shortened.size() == through + inside);
        if (code.size() >= 2 && shortened.size() >= 2) {
            CHECK(*shortened.min_distance() + 1 >= *code.min_distance());
        }
    }
}

TEST_CASE("shorten validates its preconditions") {
    const SubspaceCode code = the_17_code();
    Subspace p = point_of(7, 0);
    Subspace h = dual(point_of(7, 1));  // p lies inside this hyperplane
    CHECK_THROWS_AS(shorten(code, p, h), std::invalid_argument);
    CHECK_THROWS_AS(shorten(code, h, h), std::invalid_argument);
}

TEST_CASE("emit/parse round trip is the identity") {
    const SubspaceCode code = the_17_code();
    ClaimSpec claim;
    claim.size = 17;
    claim.distance = 6;
    claim.dims = std::set<unsigned>{3};
    std::string text = emit_code_string(code, claim);
    std::istringstream in(text);
    ParsedCode parsed = parse_code(in);
    CHECK(parsed.code.codewords() == code.codewords());
    REQUIRE(parsed.claim.has_value());
    CHECK(*parsed.claim->size == 17);
    CHECK(*parsed.claim->distance == 6);
    CHECK(emit_code_string(parsed.code, parsed.claim) == text);
}

TEST_CASE("parser reports duplicates with the line number") {
    std::istringstream in("q=2 v=4\n1000,0100\n0100,1000\n");
    try {
        parse_code(in);
        FAIL("expected a duplicate error");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("duplicate") != std::string::npos);
    }
}

TEST_CASE("parser canonicalizes arbitrary bases") {
    std::istringstream a("q=2 v=4\n1100,0110\n");
    std::istringstream b("q=2 v=4\n1010,0110\n");  // same row space
    CHECK(parse_code(a).code.codewords() == parse_code(b).code.codewords());
}

TEST_CASE("parser rejects malformed input") {
    std::istringstream no_header("1000\n");
    CHECK_THROWS_AS(parse_code(no_header), std::runtime_error);
    std::istringstream bad_digit("q=2 v=4\n1200\n");
    CHECK_THROWS_AS(parse_code(bad_digit), std::runtime_error);
    std::istringstream bad_length("q=2 v=4\n10000\n");
    CHECK_THROWS_AS(parse_code(bad_length), std::runtime_error);
    std::istringstream bad_field("q=4 v=4\n1000\n");
    CHECK_THROWS_AS(parse_code(bad_field), std::runtime_error);
}

TEST_CASE("zero subspace round trips as '-'") {
    SubspaceCode code = SubspaceCode::from_subspaces(FieldSpec(2), 4, {Subspace(MatRows(FieldSpec(2), 0, 4))});
    std::string text = emit_code_string(code);
    CHECK(text.find("-\n") != std::string::npos);
    std::istringstream in(text);
    CHECK(parse_code(in).code.codewords() == code.codewords());
}
