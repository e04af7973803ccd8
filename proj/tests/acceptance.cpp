// Acceptance suite: one line per criterion, exit status 0 only when every
// criterion passes. Each criterion pins its expected values in code and
// re-derives them through independent oracles where one is called for.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "test_support.hpp"

#include "subcode/bounds.hpp"
#include "subcode/clique_engine.hpp"
#include "subcode/codes.hpp"
#include "subcode/constructions.hpp"
#include "subcode/grassmann.hpp"
#include "subcode/ilp_models.hpp"

using namespace subcode;
namespace fs = std::filesystem;

namespace {

int failures_total = 0;

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

void run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<void(std::vector<std::string>&)>& body) {
    std::vector<std::string> problems;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_seconds) {
        problems.push_back("runtime " + std::to_string(secs) + " s exceeds the stated limit of " +
                           std::to_string(limit_seconds) + " s");
    }
    if (problems.empty()) {
        std::printf("criterion %d [%s]: PASS (%.1f s)\n", number, title.c_str(), secs);
    } else {
        ++failures_total;
        std::printf("criterion %d [%s]: FAIL (%.1f s)\n", number, title.c_str(), secs);
        for (const std::string& p : problems) std::printf("    - %s\n", p.c_str());
    }
    std::fflush(stdout);
}

const SubspaceCode& code17() {
    static SubspaceCode code = plus_one(lifted_mrd_code(2, 7, 3, 1));
    return code;
}

const SubspaceCode& code257() {
    static SubspaceCode code = plus_one(lifted_mrd_code(2, 8, 4, 2));
    return code;
}

Subspace standard_point(unsigned v, unsigned coord) {
    MatRows m(FieldSpec(2), 1, v);
    m.set(0, coord, 1);
    return Subspace(std::move(m));
}

// ---- criterion 1: Gaussian binomial anchors and enumeration counts ---------

void criterion1(std::vector<std::string>& problems) {
    expect(problems, gaussian_binomial(7, 3, 2) == 11811, "[7,3]_2 != 11811");
    expect(problems, gaussian_binomial(8, 4, 2) == 200787, "[8,4]_2 != 200787");
    for (unsigned q : {2u, 3u}) {
        for (unsigned v = 1; v <= 6; ++v) {
            for (unsigned k = 0; k <= v; ++k) {
                Grassmannian g(FieldSpec(q), v, k);
                std::uint64_t count = 0;
                std::set<std::vector<std::uint8_t>> canonical;
                g.for_each([&](const Subspace& s) {
                    ++count;
                    std::vector<std::uint8_t> key;
                    key.reserve(static_cast<std::size_t>(s.dim()) * v);
                    for (unsigned r = 0; r < s.dim(); ++r) {
                        for (unsigned c = 0; c < v; ++c) key.push_back(s.basis.get(r, c));
                    }
                    canonical.insert(std::move(key));
                });
                if (count != gaussian_binomial(v, k, q) || canonical.size() != count) {
                    problems.push_back("enumeration mismatch at q=" + std::to_string(q) + " v=" + std::to_string(v) +
                                       " k=" + std::to_string(k));
                }
            }
        }
    }
}

// ---- criterion 2: the bound pipeline ----------------------------------------

void criterion2(std::vector<std::string>& problems) {
    const BoundsDb db = BoundsDb::seed_table();
    expect(problems, johnson_bound(2, 8, 6, 4, db).value == 289, "johnson_bound(2,8,6,4) != 289");
    expect(problems, one_incidence_bound(2, 4, 1) == 272, "one_incidence_bound(2,4,1) != 272");
    expect(problems, pair_threshold(2, 8, 4, 34) == mpq_class(561, 2), "pair_threshold(2,8,4,34) != 561/2");
    expect(problems, partial_spread_size(2, 9, 4) == 33, "partial_spread_size(2,9,4) != 33");
}

// ---- criterion 3: constructions with full pairwise audits -------------------

void audit_code(std::vector<std::string>& problems, const SubspaceCode& code, const char* name, std::size_t n,
                unsigned d, unsigned k) {
    if (code.size() != n) {
        problems.push_back(std::string(name) + ": size " + std::to_string(code.size()));
        return;
    }
    // full pairwise audit, independent of the cached verify() path
    unsigned minimum = 2 * code.ambient();
    const auto& words = code.codewords();
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].dim() != k) {
            problems.push_back(std::string(name) + ": wrong codeword dimension");
            return;
        }
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            minimum = std::min(minimum, subspace_distance(words[i], words[j]));
        }
    }
    expect(problems, minimum == d, std::string(name) + ": pairwise audit distance " + std::to_string(minimum));
    VerifyReport rep = verify(code);
    expect(problems, rep.min_distance && *rep.min_distance == d, std::string(name) + ": verify() distance mismatch");
}

void criterion3(std::vector<std::string>& problems) {
    audit_code(problems, code17(), "(7,17,6;3)_2", 17, 6, 3);
    audit_code(problems, code257(), "(8,257,6;4)_2", 257, 6, 4);
}

// ---- criterion 4: extension graph and the 16-clique -------------------------

void criterion4(std::vector<std::string>& problems) {
    ExtensionGraph ext = build_extension_graph(code17(), 2);
    const std::uint64_t n = ext.graph.order();
    const std::uint64_t m = ext.graph.edge_count();
    expect(problems, n >= 832 && n <= 1056, "vertex count " + std::to_string(n) + " outside [832,1056]");
    expect(problems, m >= 213760 && m <= 353088, "edge count " + std::to_string(m) + " outside [213760,353088]");

    CliqueBudget budget;
    budget.target = 16;
    budget.max_seconds = 1800;
    budget.threads = 2;
    budget.seed = 1;
    budget.sls_iterations = 20000000;
    CliqueResult result = max_clique(ext.graph, budget);
    expect(problems, result.lower <= result.upper, "invalid bounds: lower > upper");

    if (result.lower >= 16) {
        std::vector<Subspace> words = code17().codewords();
        for (std::uint32_t v : result.clique) words.push_back(ext.candidates[v]);
        SubspaceCode extended = SubspaceCode::from_subspaces(FieldSpec(2), 7, std::move(words));
        VerifyReport rep = verify(extended);
        expect(problems, rep.size == 33, "extended code size " + std::to_string(rep.size));
        expect(problems, rep.min_distance && *rep.min_distance == 5, "extended code distance != 5");
        expect(problems, rep.dims == std::set<unsigned>({3, 4}), "extended code dimensions != {3,4}");
        expect(problems, rep.distribution.render() == "3^17 4^16",
               "dimension distribution " + rep.distribution.render());
    } else {
        // fallback: a 14-clique plus a valid anytime bound; the true optimum
        // is 16, so a sound upper bound cannot fall below it
        expect(problems, result.lower >= 14,
               "fallback failed: clique size " + std::to_string(result.lower) + " < 14");
        expect(problems, result.upper >= 16, "anytime upper bound " + std::to_string(result.upper) + " < 16");
    }
}

// ---- criterion 5: exact small optima vs. naive exhaustive search ------------

void criterion5(std::vector<std::string>& problems) {
    {
        ConflictGraph g = build_distance_graph(2, 4, 2, 4);
        CliqueResult r = max_clique(g);
        expect(problems, r.optimal && r.lower == 5, "(2,4,2,4) optimum != 5");
        testsupport::NaiveClique oracle(g);
        expect(problems, oracle.solve() == 5, "(2,4,2,4) naive search != 5");
    }
    {
        ConflictGraph g = build_distance_graph(2, 5, 2, 4);
        CliqueResult r = max_clique(g);
        expect(problems, r.optimal && r.lower == 9, "(2,5,2,4) optimum != 9");
        testsupport::NaiveClique oracle(g);
        expect(problems, oracle.solve() == 9, "(2,5,2,4) naive search != 9");
    }
}

// ---- criterion 6: model fidelity ---------------------------------------------

void criterion6(std::vector<std::string>& problems) {
    const BoundsDb db = BoundsDb::seed_table();
    IlpModel model = build_full_model(2, 8, 6, 4, db);
    ModelStats st = stats(model);
    expect(problems, st.variables == 200787, "variables " + std::to_string(st.variables) + " != 200787");
    expect(problems, st.constraints == 22100, "constraints " + std::to_string(st.constraints) + " != 22100");

    // family structure: counts and terms per constraint match the subspace counts
    std::map<std::string, std::size_t> family_count;
    std::map<std::string, std::size_t> family_terms;
    for (const LinearConstraint& c : model.constraints) {
        const std::string family = c.name.substr(0, c.name.find('_'));
        ++family_count[family];
        family_terms[family] = c.terms.size();  // uniform within a family
    }
    expect(problems,
           family_count["a1"] == 255 && family_count["a2"] == 10795 && family_count["a6"] == 10795 &&
               family_count["a7"] == 255,
           "family constraint counts are not 255/10795/10795/255");
    expect(problems,
           family_terms["a1"] == 11811 && family_terms["a2"] == 651 && family_terms["a6"] == 651 &&
               family_terms["a7"] == 11811,
           "family term counts are not 11811/651/651/11811");

    Assignment incidence = assignment_from_code(model, code257());
    CheckReport rep = check_solution(model, incidence);
    expect(problems, rep.feasible, "257-code incidence vector infeasible");
    expect(problems, rep.binary, "257-code incidence vector flagged fractional");
    expect(problems, rep.objective == 257, "objective " + rep.objective.get_str() + " != 257");

    const fs::path dir = fs::temp_directory_path();
    const fs::path f1 = dir / "subcode_acceptance_model_1.lp";
    const fs::path f2 = dir / "subcode_acceptance_model_2.lp";
    for (const fs::path& f : {f1, f2}) {
        std::ofstream out(f, std::ios::binary);
        export_model(model, out);
    }
    std::ifstream a(f1, std::ios::binary), b(f2, std::ios::binary);
    std::vector<char> ba(1 << 20), bb(1 << 20);
    bool equal = true;
    while (true) {
        a.read(ba.data(), static_cast<std::streamsize>(ba.size()));
        b.read(bb.data(), static_cast<std::streamsize>(bb.size()));
        if (a.gcount() != b.gcount()) {
            equal = false;
            break;
        }
        if (a.gcount() == 0) break;
        if (!std::equal(ba.begin(), ba.begin() + a.gcount(), bb.begin())) {
            equal = false;
            break;
        }
        if (a.eof() && b.eof()) break;
    }
    expect(problems, equal, "exported model files differ between runs");
    fs::remove(f1);
    fs::remove(f2);
}

// ---- criterion 7: property suites --------------------------------------------

void criterion7(std::vector<std::string>& problems) {
    // metric axioms and duality isometry: 1000 samples per parameter point
    struct Point {
        unsigned q, v;
    };
    for (Point pt : {Point{2, 6}, Point{2, 7}, Point{3, 4}}) {
        std::mt19937_64 rng(9000 + pt.q * 100 + pt.v);
        for (int trial = 0; trial < 1000; ++trial) {
            Subspace a = testsupport::random_subspace(rng, pt.q, pt.v, 1 + rng() % (pt.v - 1));
            Subspace b = testsupport::random_subspace(rng, pt.q, pt.v, 1 + rng() % (pt.v - 1));
            Subspace c = testsupport::random_subspace(rng, pt.q, pt.v, 1 + rng() % (pt.v - 1));
            const unsigned ab = subspace_distance(a, b);
            if (ab != subspace_distance(b, a)) {
                problems.push_back("distance asymmetry");
                return;
            }
            if ((ab == 0) != (a == b)) {
                problems.push_back("identity axiom violated");
                return;
            }
            if (subspace_distance(a, c) > ab + subspace_distance(b, c)) {
                problems.push_back("triangle inequality violated");
                return;
            }
            if (ab != subspace_distance(dual(a), dual(b))) {
                problems.push_back("duality is not an isometry");
                return;
            }
        }
    }

    // shorten: size additivity and the distance contract on 200 random codes
    {
        std::mt19937_64 rng(77007);
        for (int trial = 0; trial < 200; ++trial) {
            const unsigned v = trial % 2 ? 6 : 7;
            const unsigned k = 2 + rng() % 2;
            std::vector<Subspace> words;
            std::set<std::size_t> seen;
            const std::size_t want = 5 + rng() % 12;
            while (words.size() < want) {
                Subspace s = testsupport::random_subspace(rng, 2, v, k);
                if (seen.insert(s.hash_value()).second) words.push_back(s);
            }
            SubspaceCode code = SubspaceCode::from_subspaces(FieldSpec(2), v, std::move(words));
            Subspace p = standard_point(v, static_cast<unsigned>(rng() % v));
            Subspace h = dual(p);
            const std::size_t through = incidence_set(code, p).size();
            const std::size_t inside = incidence_set(code, h).size();
            SubspaceCode shortened = shorten(code, p, h);
            if (shortened.size() != through + inside) {
                problems.push_back("shorten size additivity violated at trial " + std::to_string(trial));
                return;
            }
            if (code.size() >= 2 && shortened.size() >= 2 &&
                *shortened.min_distance() + 1 < *code.min_distance()) {
                problems.push_back("shorten distance contract violated at trial " + std::to_string(trial));
                return;
            }
        }
    }

    // orthogonal involution on random codes
    {
        std::mt19937_64 rng(31415);
        for (int trial = 0; trial < 40; ++trial) {
            const unsigned v = 5 + trial % 3;
            const unsigned k = 1 + rng() % (v - 1);
            std::vector<Subspace> words;
            std::set<std::size_t> seen;
            while (words.size() < 8) {
                Subspace s = testsupport::random_subspace(rng, 2, v, k);
                if (seen.insert(s.hash_value()).second) words.push_back(s);
            }
            SubspaceCode code = SubspaceCode::from_subspaces(FieldSpec(2), v, std::move(words));
            SubspaceCode twice = orthogonal_code(orthogonal_code(code));
            if (!(twice.codewords() == code.codewords())) {
                problems.push_back("orthogonal_code is not an involution");
                return;
            }
            if (code.size() >= 2 && *orthogonal_code(code).min_distance() != *code.min_distance()) {
                problems.push_back("orthogonal_code changed the minimum distance");
                return;
            }
        }
    }

    // RREF idempotence and the elimination oracle on 10000 random matrices
    {
        std::mt19937_64 rng(424242);
        for (int trial = 0; trial < 10000; ++trial) {
            const unsigned q = trial % 3 == 0 ? 3 : 2;
            const unsigned rows = 1 + rng() % 8;
            const unsigned cols = 1 + rng() % 8;
            MatRows m = testsupport::random_matrix(rng, q, rows, cols);
            RrefResult once = rref(m);
            if (!(rref(once.matrix).matrix == once.matrix)) {
                problems.push_back("rref is not idempotent");
                return;
            }
            if (once.rank != testsupport::naive_rank_fraction_free(q, testsupport::to_bytes(m))) {
                problems.push_back("rank disagrees with the fraction-free oracle");
                return;
            }
        }
    }
}

// ---- criterion 8: z(F) equivalence -------------------------------------------

void criterion8(std::vector<std::string>& problems) {
    std::mt19937_64 rng(880088);
    int instances = 0;
    int attempts = 0;
    while (instances < 50 && attempts < 500) {
        ++attempts;
        // grow a random solid set until the candidate set is small enough
        std::vector<Subspace> solids;
        std::set<std::size_t> seen;
        const std::size_t base = 55 + rng() % 25;
        while (solids.size() < base) {
            Subspace s = testsupport::random_subspace(rng, 2, 7, 4);
            if (seen.insert(s.hash_value()).second) solids.push_back(s);
        }
        SubspaceCode f = SubspaceCode::from_subspaces(FieldSpec(2), 7, solids);
        ExtensionModel ext = build_extension_model(f, false);
        while (ext.candidates.size() > 400) {
            while (true) {
                Subspace s = testsupport::random_subspace(rng, 2, 7, 4);
                if (seen.insert(s.hash_value()).second) {
                    solids.push_back(s);
                    break;
                }
            }
            f = SubspaceCode::from_subspaces(FieldSpec(2), 7, solids);
            ext = build_extension_model(f, false);
        }
        if (ext.candidates.size() < 10) continue;  // degenerate, try again
        ++instances;

        // route A: the returned conflict graph; route B: co-occurrence in the
        // model's line constraints
        const std::uint32_t n = ext.graph.order();
        std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
        for (const LinearConstraint& c : ext.model.constraints) {
            for (std::size_t i = 0; i < c.terms.size(); ++i) {
                for (std::size_t j = i + 1; j < c.terms.size(); ++j) {
                    conflict[c.terms[i].first][c.terms[j].first] = true;
                    conflict[c.terms[j].first][c.terms[i].first] = true;
                }
            }
        }
        ConflictGraph from_model(n);
        from_model.labels = ext.graph.labels;
        for (std::uint32_t u = 0; u < n; ++u) {
            for (std::uint32_t w = u + 1; w < n; ++w) {
                if (!conflict[u][w]) from_model.add_edge(u, w);
            }
        }
        if (from_model.edge_count() != ext.graph.edge_count()) {
            problems.push_back("constraint-derived graph differs from the returned graph (instance " +
                               std::to_string(instances) + ")");
            return;
        }
        CliqueBudget budget;
        budget.sls_iterations = 20000;
        CliqueResult blp = max_clique(from_model, budget);
        CliqueResult graph = max_clique(ext.graph, budget);
        if (!blp.optimal || !graph.optimal || blp.lower != graph.lower) {
            problems.push_back("z(F) mismatch at instance " + std::to_string(instances) + ": " +
                               std::to_string(blp.lower) + " vs " + std::to_string(graph.lower));
            return;
        }
    }
    expect(problems, instances == 50, "only " + std::to_string(instances) + " usable instances generated");
}

}  // namespace

int main() {
    std::printf("subspace-code acceptance suite\n");
    run_criterion(1, "gaussian binomial anchors and enumeration counts", 60, criterion1);
    run_criterion(2, "bound pipeline", 1, criterion2);
    run_criterion(3, "lifted MRD plus one constructions", 300, criterion3);
    run_criterion(4, "extension graph and 16-clique", 1900, criterion4);
    run_criterion(5, "exact small clique optima", 60, criterion5);
    run_criterion(6, "model fidelity", 600, criterion6);
    run_criterion(7, "property suites", 600, criterion7);
    run_criterion(8, "z(F) equivalence", 900, criterion8);
    if (failures_total == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures_total);
    return 1;
}
