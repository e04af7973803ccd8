// subcode: exact tooling for constant-dimension subspace codes.
//
// Subcommands: enumerate, verify, bound, construct, shorten, dualize,
// build-ilp, build-ext, build-blowup, check-sol, clique. Artifacts are
// written atomically; all output is deterministic given (config, seed),
// with timestamps confined to lines prefixed '#'.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

#include "subcode/bounds.hpp"
#include "subcode/clique_engine.hpp"
#include "subcode/codes.hpp"
#include "subcode/constructions.hpp"
#include "subcode/grassmann.hpp"
#include "subcode/ilp_models.hpp"

namespace {

using namespace subcode;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void write_atomic(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + tmp);
        writer(out);
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

unsigned env_or(const char* name, unsigned fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr) return fallback;
    return static_cast<unsigned>(std::strtoul(value, nullptr, 10));
}

double env_or_double(const char* name, double fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr) return fallback;
    return std::strtod(value, nullptr);
}

Subspace parse_vector_subspace(const std::string& digits, unsigned q, unsigned v, const char* what) {
    if (digits.size() != v) {
        throw std::invalid_argument(std::string(what) + ": expected a length-" + std::to_string(v) + " digit string");
    }
    MatRows row(FieldSpec(q), 1, v);
    for (unsigned c = 0; c < v; ++c) {
        char ch = digits[c];
        if (ch < '0' || ch >= static_cast<char>('0' + q)) {
            throw std::invalid_argument(std::string(what) + ": entry not in {0..q-1}");
        }
        row.set(0, c, static_cast<std::uint8_t>(ch - '0'));
    }
    if (row.row_is_zero(0)) throw std::invalid_argument(std::string(what) + ": zero vector");
    return Subspace::from_rows(row);
}

BoundsDb load_db(const std::string& bounds_file) {
    if (bounds_file.empty()) return BoundsDb::seed_table();
    return BoundsDb::load_file(bounds_file);
}

void run_solver_bridge(const std::string& solver_cmd, const std::string& model_path, const IlpModel& model) {
    std::string cmd = solver_cmd;
    const std::string solution_path = model_path + ".sol";
    auto substitute = [&cmd](const std::string& key, const std::string& value) {
        for (std::size_t pos = cmd.find(key); pos != std::string::npos; pos = cmd.find(key, pos + value.size())) {
            cmd.replace(pos, key.size(), value);
        }
    };
    substitute("{model}", model_path);
    substitute("{solution}", solution_path);
    std::cout << "# solver bridge: " << cmd << "\n";
    int rc = std::system(cmd.c_str());
    if (rc != 0) throw std::runtime_error("solver command failed with status " + std::to_string(rc));
    std::ifstream in(solution_path);
    if (!in) throw std::runtime_error("solver produced no solution file: " + solution_path);
    // never trust the external objective: recheck everything exactly
    Assignment assignment = import_solution(model, in);
    CheckReport report = check_solution(model, assignment);
    std::cout << report.render();
    if (!report.feasible) throw std::runtime_error("external solution fails the exact recheck");
}

struct CliqueOptions {
    std::uint32_t target = 0;
    double budget_seconds = 0;
    std::uint64_t budget_nodes = 0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    unsigned greedy_restarts = 64;
    std::uint64_t sls_iterations = 200000;

    CliqueBudget to_budget() const {
        CliqueBudget b;
        b.target = target;
        b.max_seconds = budget_seconds > 0 ? budget_seconds : env_or_double("SUBCODE_BUDGET_SECONDS", 0);
        b.max_nodes = budget_nodes;
        b.seed = seed;
        b.threads = threads > 0 ? threads : env_or("SUBCODE_THREADS", 1);
        b.greedy_restarts = greedy_restarts;
        b.sls_iterations = sls_iterations;
        return b;
    }
};

void print_clique_result(const CliqueResult& result, const ConflictGraph& graph) {
    std::cout << "vertices=" << graph.order() << "\n";
    std::cout << "edges=" << graph.edge_count() << "\n";
    std::cout << "clique_size=" << result.lower << "\n";
    std::cout << "upper_bound=" << result.upper << "\n";
    std::cout << "optimal=" << (result.optimal ? "yes" : "no") << "\n";
    std::cout << "interrupted=" << (result.interrupted ? "yes" : "no") << "\n";
    std::cout << "nodes=" << result.nodes << "\n";
    std::cout << "# elapsed " << result.seconds << " s\n";
    std::cout << "clique_labels=";
    for (std::size_t i = 0; i < result.clique.size(); ++i) {
        std::cout << (i ? "," : "") << graph.labels[result.clique[i]];
    }
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for constant-dimension subspace codes"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    // ---- enumerate ----------------------------------------------------
    unsigned en_q = 2, en_v = 0, en_k = 0;
    bool en_list = false;
    std::string en_out;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "count or list k-subspaces of F_q^v");
    enumerate_cmd->add_option("q", en_q, "field order")->required();
    enumerate_cmd->add_option("v", en_v, "ambient dimension")->required();
    enumerate_cmd->add_option("k", en_k, "subspace dimension")->required();
    enumerate_cmd->add_flag("--list", en_list, "write every subspace in code-file format");
    enumerate_cmd->add_option("-o,--output", en_out, "output file for --list");

    // ---- verify -------------------------------------------------------
    std::string ve_file;
    int ve_claim_n = -1, ve_claim_d = -1;
    std::string ve_claim_k;
    auto* verify_cmd = app.add_subcommand("verify", "verify a code file and its claim");
    verify_cmd->add_option("file", ve_file, "code file")->required();
    verify_cmd->add_option("--claim-n", ve_claim_n, "expected size N");
    verify_cmd->add_option("--claim-d", ve_claim_d, "expected minimum distance");
    verify_cmd->add_option("--claim-k", ve_claim_k, "expected dimension set, comma-joined");

    // ---- bound --------------------------------------------------------
    unsigned bo_q = 2, bo_v = 0, bo_d = 0, bo_k = 0;
    std::string bo_bounds_file;
    long bo_cascade = -1;
    auto* bound_cmd = app.add_subcommand("bound", "upper bounds for A_q(v,d;k) with derivations");
    bound_cmd->add_option("q", bo_q)->required();
    bound_cmd->add_option("v", bo_v)->required();
    bound_cmd->add_option("d", bo_d)->required();
    bound_cmd->add_option("k", bo_k)->required();
    bound_cmd->add_option("--bounds-file", bo_bounds_file, "known-values table (default: built-in seed)");
    bound_cmd->add_option("--cascade", bo_cascade, "check the no-improvement chain for this improved upper bound");
    std::string bo_dump;
    bound_cmd->add_option("--dump-db", bo_dump, "write the known-values table to this file");

    // ---- construct ------------------------------------------------------
    std::string co_variant, co_out;
    unsigned co_q = 2, co_v = 0, co_k = 0, co_msg = 0;
    auto* construct_cmd = app.add_subcommand("construct", "deterministic lower-bound constructions");
    construct_cmd->add_option("variant", co_variant, "lifted-mrd or lifted-mrd-plus-one")->required();
    construct_cmd->add_option("q", co_q)->required();
    construct_cmd->add_option("v", co_v)->required();
    construct_cmd->add_option("k", co_k)->required();
    construct_cmd->add_option("--message-dim", co_msg, "Gabidulin message dimension k' (default k-2)");
    construct_cmd->add_option("-o,--output", co_out, "output code file");

    // ---- shorten --------------------------------------------------------
    std::string sh_file, sh_point, sh_normal, sh_out;
    auto* shorten_cmd = app.add_subcommand("shorten", "shortened code S(C,P,H) in the hyperplane");
    shorten_cmd->add_option("file", sh_file)->required();
    shorten_cmd->add_option("--point", sh_point, "point as a length-v digit string (default e1)");
    shorten_cmd->add_option("--normal", sh_normal, "hyperplane normal vector (default e1)");
    shorten_cmd->add_option("-o,--output", sh_out, "output code file")->required();

    // ---- dualize --------------------------------------------------------
    std::string du_file, du_out;
    auto* dualize_cmd = app.add_subcommand("dualize", "orthogonal code");
    dualize_cmd->add_option("file", du_file)->required();
    dualize_cmd->add_option("-o,--output", du_out, "output code file")->required();

    // ---- build-ilp ------------------------------------------------------
    unsigned bi_q = 2, bi_v = 0, bi_d = 0, bi_k = 0;
    std::string bi_out, bi_bounds_file, bi_solver;
    bool bi_full = false, bi_relax = false;
    auto* build_ilp_cmd = app.add_subcommand("build-ilp", "full A_q(v,d;k) binary model in LP format");
    build_ilp_cmd->add_option("q", bi_q)->required();
    build_ilp_cmd->add_option("v", bi_v)->required();
    build_ilp_cmd->add_option("d", bi_d)->required();
    build_ilp_cmd->add_option("k", bi_k)->required();
    build_ilp_cmd->add_option("-o,--output", bi_out, "model file")->required();
    build_ilp_cmd->add_flag("--full-constraints", bi_full, "keep the redundant middle dimensions");
    build_ilp_cmd->add_flag("--relax", bi_relax, "emit the LP relaxation instead of the binary model");
    build_ilp_cmd->add_option("--bounds-file", bi_bounds_file);
    build_ilp_cmd->add_option("--solver-cmd", bi_solver,
                              "external solver command with {model} and {solution} placeholders");

    // ---- build-ext ------------------------------------------------------
    std::string be_file, be_out, be_graph_out, be_solver;
    bool be_relax = false, be_any = false;
    auto* build_ext_cmd = app.add_subcommand("build-ext", "hyperplane-relaxation model z(F) for a solid set F");
    build_ext_cmd->add_option("file", be_file, "code file with the solids F")->required();
    build_ext_cmd->add_option("-o,--output", be_out, "model file");
    build_ext_cmd->add_option("--graph-out", be_graph_out, "conflict graph in DIMACS format");
    build_ext_cmd->add_flag("--relax", be_relax);
    build_ext_cmd->add_flag("--allow-any-set", be_any, "skip the (7,*,6;4)_2 parameter check");
    build_ext_cmd->add_option("--solver-cmd", be_solver);

    // ---- build-blowup ----------------------------------------------------
    std::string bb_f3, bb_f4, bb_out, bb_solver;
    bool bb_relax = false;
    auto* build_blowup_cmd = app.add_subcommand("build-blowup", "blow-up model z(F3,F4) in F_2^8");
    build_blowup_cmd->add_option("f3", bb_f3, "(7,17,6;3)_2 code file")->required();
    build_blowup_cmd->add_option("f4", bb_f4, "(7,16,6;4)_2 code file")->required();
    build_blowup_cmd->add_option("-o,--output", bb_out, "model file")->required();
    build_blowup_cmd->add_flag("--relax", bb_relax);
    build_blowup_cmd->add_option("--solver-cmd", bb_solver);

    // ---- check-sol ------------------------------------------------------
    std::vector<unsigned> cs_full;
    std::string cs_ext, cs_solution, cs_code, cs_bounds_file;
    std::vector<std::string> cs_blowup;
    auto* check_sol_cmd = app.add_subcommand("check-sol", "exact feasibility/objective check of a solution");
    check_sol_cmd->add_option("--full", cs_full, "rebuild the full model: q v d k")->expected(4);
    check_sol_cmd->add_option("--ext", cs_ext, "rebuild the extension model from this code file");
    check_sol_cmd->add_option("--blowup", cs_blowup, "rebuild the blow-up model: f3 f4")->expected(2);
    check_sol_cmd->add_option("--solution", cs_solution, "solution file with 'name value' lines");
    check_sol_cmd->add_option("--code", cs_code, "code file used as a 0/1 incidence assignment");
    check_sol_cmd->add_option("--bounds-file", cs_bounds_file);

    // ---- clique ----------------------------------------------------------
    std::vector<unsigned> cl_distance;
    std::string cl_ext, cl_graph_out, cl_extended_out;
    CliqueOptions cl_opts;
    auto* clique_cmd = app.add_subcommand("clique", "exact/anytime maximum clique on a conflict graph");
    clique_cmd->add_option("--distance", cl_distance, "distance graph: q v k d")->expected(4);
    clique_cmd->add_option("--ext", cl_ext, "extension graph of a (7,17,6;3)_2 code file");
    clique_cmd->add_option("--target", cl_opts.target, "stop at the first clique of this size");
    clique_cmd->add_option("--budget-seconds", cl_opts.budget_seconds);
    clique_cmd->add_option("--budget-nodes", cl_opts.budget_nodes);
    clique_cmd->add_option("--seed", cl_opts.seed);
    clique_cmd->add_option("--threads", cl_opts.threads);
    clique_cmd->add_option("--greedy-restarts", cl_opts.greedy_restarts);
    clique_cmd->add_option("--sls-iterations", cl_opts.sls_iterations,
                           "plateau-search steps before branch and bound");
    clique_cmd->add_option("--graph-out", cl_graph_out, "export the graph in DIMACS format");
    clique_cmd->add_option("--emit-extended", cl_extended_out,
                           "with --ext: write the code extended by the clique");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate_cmd) {
            mpz_class count = gaussian_binomial(en_v, en_k, en_q);
            std::cout << "count=" << count.get_str() << "\n";
            if (en_list) {
                Grassmannian g(FieldSpec(en_q), en_v, en_k);
                std::vector<Subspace> all = g.materialize();
                SubspaceCode as_code = SubspaceCode::from_subspaces(FieldSpec(en_q), en_v, std::move(all));
                if (!en_out.empty()) {
                    write_atomic(en_out, [&](std::ostream& out) { emit_code(as_code, out); });
                } else {
                    emit_code(as_code, std::cout);
                }
                std::cout << "enumerated=" << as_code.size() << "\n";
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            ParsedCode parsed = parse_code_file(ve_file);
            std::optional<ClaimSpec> claim = parsed.claim;
            if (ve_claim_n >= 0 || ve_claim_d >= 0 || !ve_claim_k.empty()) {
                ClaimSpec flag_claim = claim.value_or(ClaimSpec{});
                if (ve_claim_n >= 0) flag_claim.size = static_cast<std::size_t>(ve_claim_n);
                if (ve_claim_d >= 0) flag_claim.distance = static_cast<unsigned>(ve_claim_d);
                if (!ve_claim_k.empty()) {
                    std::set<unsigned> dims;
                    std::stringstream ss(ve_claim_k);
                    std::string item;
                    while (std::getline(ss, item, ',')) dims.insert(static_cast<unsigned>(std::stoul(item)));
                    flag_claim.dims = dims;
                }
                claim = flag_claim;
            }
            VerifyReport report = verify(parsed.code, claim);
            std::cout << "q=" << unsigned(parsed.code.field().q) << " v=" << parsed.code.ambient() << "\n";
            std::cout << report.render();
            return report.claim_checked && !report.claim_ok ? kExitMismatch : kExitOk;
        }

        if (*bound_cmd) {
            BoundsDb db = load_db(bo_bounds_file);
            if (!bo_dump.empty()) {
                write_atomic(bo_dump, [&](std::ostream& out) { db.save(out); });
                std::cout << "wrote " << bo_dump << "\n";
            }
            if (auto rec = db.lookup(bo_q, bo_v, bo_d, bo_k)) {
                std::cout << "db: A_" << bo_q << "(" << bo_v << "," << bo_d << ";" << bo_k << ") in ["
                          << (rec->lower ? rec->lower->get_str() : "?") << ", "
                          << (rec->upper ? rec->upper->get_str() : "?") << "] (" << rec->provenance << ")\n";
            }
            BoundResult johnson = johnson_bound(bo_q, bo_v, bo_d, bo_k, db);
            std::cout << "johnson=" << johnson.value.get_str() << "\n" << johnson.derivation << "\n";
            if (bo_v == 2 * bo_k && bo_d == 2 * bo_k - 2) {
                for (unsigned c = 0; c <= 1; ++c) {
                    mpz_class oi = one_incidence_bound(bo_q, bo_k, c);
                    std::cout << "one_incidence(c=" << c << ")=" << oi.get_str()
                              << "  # valid if every point (or every hyperplane) meets at most q^k+1-" << c
                              << " codewords\n";
                }
                mpz_class qk;
                mpz_ui_pow_ui(qk.get_mpz_t(), bo_q, bo_k);
                for (unsigned c = 0; c <= 1; ++c) {
                    mpz_class bb = 2 * (qk + 1) - c;
                    mpq_class threshold = pair_threshold(bo_q, bo_v, bo_k, bb);
                    std::cout << "pair_threshold(b=" << bb.get_str() << ")=" << threshold.get_str()
                              << "  # any larger code has a non-incident point/hyperplane pair with combined "
                                 "incidence >= b\n";
                }
            }
            if (bo_d == 2 * bo_k && bo_k >= 2 && bo_v % bo_k == 1) {
                std::cout << "partial_spread=" << partial_spread_size(bo_q, bo_v, bo_k).get_str() << "\n";
            }
            if (bo_cascade >= 0) {
                CascadeReport rep = johnson_cascade_check(bo_q, bo_k, mpz_class(bo_cascade));
                std::cout << rep.text << "\n";
                return rep.holds ? kExitOk : kExitMismatch;
            }
            return kExitOk;
        }

        if (*construct_cmd) {
            if (co_variant != "lifted-mrd" && co_variant != "lifted-mrd-plus-one") {
                throw std::invalid_argument("construct: unknown variant '" + co_variant + "'");
            }
            unsigned msg = co_msg > 0 ? co_msg : (co_k >= 3 ? co_k - 2 : 1);
            SubspaceCode code = lifted_mrd_code(co_q, co_v, co_k, msg);
            if (co_variant == "lifted-mrd-plus-one") code = plus_one(code);
            VerifyReport report = verify(code);
            ClaimSpec claim;
            claim.size = report.size;
            claim.distance = report.min_distance;
            claim.dims = report.dims;
            if (!co_out.empty()) {
                write_atomic(co_out, [&](std::ostream& out) { emit_code(code, out, claim); });
                std::cout << "wrote " << co_out << "\n";
            } else {
                emit_code(code, std::cout, claim);
            }
            std::cout << report.render();
            return kExitOk;
        }

        if (*shorten_cmd) {
            ParsedCode parsed = parse_code_file(sh_file);
            const unsigned q = parsed.code.field().q;
            const unsigned v = parsed.code.ambient();
            std::string point_digits = sh_point.empty() ? "1" + std::string(v - 1, '0') : sh_point;
            std::string normal_digits = sh_normal.empty() ? "1" + std::string(v - 1, '0') : sh_normal;
            Subspace point = parse_vector_subspace(point_digits, q, v, "--point");
            Subspace normal = parse_vector_subspace(normal_digits, q, v, "--normal");
            Subspace hyperplane = dual(normal);
            SubspaceCode shortened = shorten(parsed.code, point, hyperplane);
            write_atomic(sh_out, [&](std::ostream& out) { emit_code(shortened, out); });
            std::cout << "wrote " << sh_out << "\n" << verify(shortened).render();
            return kExitOk;
        }

        if (*dualize_cmd) {
            ParsedCode parsed = parse_code_file(du_file);
            SubspaceCode dualized = orthogonal_code(parsed.code);
            write_atomic(du_out, [&](std::ostream& out) { emit_code(dualized, out); });
            std::cout << "wrote " << du_out << "\n" << verify(dualized).render();
            return kExitOk;
        }

        if (*build_ilp_cmd) {
            BoundsDb db = load_db(bi_bounds_file);
            IlpModel model = build_full_model(bi_q, bi_v, bi_d, bi_k, db, bi_full);
            ModelStats st = stats(model);
            write_atomic(bi_out, [&](std::ostream& out) { export_model(model, out, bi_relax); });
            std::cout << "wrote " << bi_out << "\n";
            std::cout << "variables=" << st.variables << "\nconstraints=" << st.constraints
                      << "\nnonzeros=" << st.nonzeros << "\n";
            if (!bi_solver.empty()) run_solver_bridge(bi_solver, bi_out, model);
            return kExitOk;
        }

        if (*build_ext_cmd) {
            ParsedCode parsed = parse_code_file(be_file);
            ExtensionModel ext = build_extension_model(parsed.code, !be_any);
            ModelStats st = stats(ext.model);
            std::cout << "candidates=" << ext.candidates.size() << "\n";
            std::cout << "variables=" << st.variables << "\nconstraints=" << st.constraints
                      << "\nnonzeros=" << st.nonzeros << "\n";
            std::cout << "graph_edges=" << ext.graph.edge_count() << "\n";
            if (!be_out.empty()) {
                write_atomic(be_out, [&](std::ostream& out) { export_model(ext.model, out, be_relax); });
                std::cout << "wrote " << be_out << "\n";
            }
            if (!be_graph_out.empty()) {
                write_atomic(be_graph_out, [&](std::ostream& out) { export_graph(ext.graph, out); });
                std::cout << "wrote " << be_graph_out << "\n";
            }
            if (!be_solver.empty() && !be_out.empty()) run_solver_bridge(be_solver, be_out, ext.model);
            return kExitOk;
        }

        if (*build_blowup_cmd) {
            ParsedCode f3 = parse_code_file(bb_f3);
            ParsedCode f4 = parse_code_file(bb_f4);
            IlpModel model = build_blowup_model(f3.code, f4.code);
            ModelStats st = stats(model);
            write_atomic(bb_out, [&](std::ostream& out) { export_model(model, out, bb_relax); });
            std::cout << "wrote " << bb_out << "\n";
            std::cout << "variables=" << st.variables << "\nconstraints=" << st.constraints
                      << "\nnonzeros=" << st.nonzeros << "\nfixings=" << model.fixings.size() << "\n";
            if (!bb_solver.empty()) run_solver_bridge(bb_solver, bb_out, model);
            return kExitOk;
        }

        if (*check_sol_cmd) {
            const int sources = int(!cs_full.empty()) + int(!cs_ext.empty()) + int(!cs_blowup.empty());
            if (sources != 1) {
                throw std::invalid_argument("check-sol: exactly one of --full, --ext, --blowup is required");
            }
            if (cs_solution.empty() == cs_code.empty()) {
                throw std::invalid_argument("check-sol: exactly one of --solution, --code is required");
            }
            IlpModel model;
            if (!cs_full.empty()) {
                model = build_full_model(cs_full[0], cs_full[1], cs_full[2], cs_full[3], load_db(cs_bounds_file));
            } else if (!cs_ext.empty()) {
                model = build_extension_model(parse_code_file(cs_ext).code).model;
            } else {
                model = build_blowup_model(parse_code_file(cs_blowup[0]).code, parse_code_file(cs_blowup[1]).code);
            }
            Assignment assignment;
            if (!cs_solution.empty()) {
                std::ifstream in(cs_solution);
                if (!in) throw std::runtime_error("cannot open solution file: " + cs_solution);
                assignment = import_solution(model, in);
            } else {
                assignment = assignment_from_code(model, parse_code_file(cs_code).code);
            }
            CheckReport report = check_solution(model, assignment);
            std::cout << report.render();
            return report.feasible ? kExitOk : kExitMismatch;
        }

        if (*clique_cmd) {
            if (cl_distance.empty() == cl_ext.empty()) {
                throw std::invalid_argument("clique: exactly one of --distance, --ext is required");
            }
            CliqueBudget budget = cl_opts.to_budget();
            ConflictGraph graph;
            std::vector<Subspace> candidates;
            std::optional<ParsedCode> base_code;
            if (!cl_distance.empty()) {
                graph = build_distance_graph(cl_distance[0], cl_distance[1], cl_distance[2], cl_distance[3],
                                             budget.threads);
            } else {
                base_code = parse_code_file(cl_ext);
                ExtensionGraph ext = build_extension_graph(base_code->code, budget.threads);
                graph = std::move(ext.graph);
                candidates = std::move(ext.candidates);
            }
            if (!cl_graph_out.empty()) {
                write_atomic(cl_graph_out, [&](std::ostream& out) { export_graph(graph, out); });
                std::cout << "wrote " << cl_graph_out << "\n";
            }
            CliqueResult result = max_clique(graph, budget);
            print_clique_result(result, graph);
            if (!cl_extended_out.empty()) {
                if (candidates.empty()) {
                    throw std::invalid_argument("clique: --emit-extended requires --ext");
                }
                std::vector<Subspace> words = base_code->code.codewords();
                for (std::uint32_t vtx : result.clique) words.push_back(candidates[vtx]);
                SubspaceCode extended =
                    SubspaceCode::from_subspaces(base_code->code.field(), base_code->code.ambient(), std::move(words));
                write_atomic(cl_extended_out, [&](std::ostream& out) { emit_code(extended, out); });
                std::cout << "wrote " << cl_extended_out << "\n" << verify(extended).render();
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
