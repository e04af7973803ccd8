#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "subcode/bounds.hpp"
#include "subcode/clique_engine.hpp"
#include "subcode/codes.hpp"

namespace subcode {

enum class Relation { le, eq };

struct LinearConstraint {
    std::string name;
    std::vector<std::pair<std::uint32_t, std::int32_t>> terms;  // (column, coefficient)
    Relation rel = Relation::le;
    mpz_class rhs;
};

enum class ModelKind { full, extension, blowup };

/// Solver-agnostic binary linear program. Variables are named
/// x_<grassmann index> (and y_<point index> in the blow-up model); all
/// coefficients and right-hand sides are integers.
class IlpModel {
  public:
    ModelKind kind = ModelKind::full;
    unsigned q = 0, v = 0, d = 0, k = 0;

    std::vector<std::string> var_names;      // column -> name
    std::vector<std::int32_t> objective;     // column -> objective coefficient
    std::vector<LinearConstraint> constraints;
    std::map<std::uint32_t, int> fixings;    // column -> 0/1
    std::vector<std::string> notes;          // rhs provenance, exported as comments

    std::uint32_t add_variable(std::string name, std::int32_t objective_coeff);
    std::optional<std::uint32_t> column_of(const std::string& name) const;

  private:
    std::unordered_map<std::string, std::uint32_t> index_;
};

struct ModelStats {
    std::size_t variables = 0;
    std::size_t constraints = 0;
    std::size_t nonzeros = 0;
};

ModelStats stats(const IlpModel& model);

/// The full A_q(v,d;k) model: binary x_U per k-subspace, incidence constraints
/// per subspace dimension family with rhs resolved through the bounds db.
/// The redundant middle dimensions are omitted unless full_constraints is set.
IlpModel build_full_model(unsigned q, unsigned v, unsigned d, unsigned k, const BoundsDb& db,
                          bool full_constraints = false);

/// Fixes x_U = 1 for every codeword; rejects prescriptions whose pairwise
/// distance already violates the model (naming the offending pair).
IlpModel prescribe(IlpModel model, const SubspaceCode& codewords);

struct ExtensionModel {
    IlpModel model;
    std::vector<Subspace> candidates;  // A(F), enumeration order
    ConflictGraph graph;               // pairwise dim(U meet W) <= 1
};

/// The hyperplane relaxation z(F) for a set F of solids of F_2^7: variables
/// over the candidate planes A(F), one <=1 constraint per line of F_2^7.
/// With require_code the input must verify as a (7,*,6;4)_2 cdc.
ExtensionModel build_extension_model(const SubspaceCode& f, bool require_code = true);

/// The blow-up model z(F3,F4) in F_2^8 for a (7,17,6;3)_2 code f3 and a
/// (7,16,6;4)_2 code f4 embedded in the hyperplane x_8 = 0.
IlpModel build_blowup_model(const SubspaceCode& f3, const SubspaceCode& f4);

/// Deterministic LP-format text; with relaxed the Binary section is replaced
/// by 0 <= x <= 1 bounds (fixings are kept either way).
void export_model(const IlpModel& model, std::ostream& out, bool relaxed = false);
std::string export_model_string(const IlpModel& model, bool relaxed = false);
std::string relax_note(const IlpModel& model);

/// Sparse assignment column -> exact rational value; absent columns are 0.
using Assignment = std::map<std::uint32_t, mpq_class>;

/// Reads `name value` lines; values are decimal strings parsed exactly.
Assignment import_solution(const IlpModel& model, std::istream& in);

/// Incidence vector of a code: x_<index(U)> = 1 per codeword.
Assignment assignment_from_code(const IlpModel& model, const SubspaceCode& code);

struct CheckReport {
    bool feasible = false;
    bool binary = true;           // false flags the LP-relaxation case
    bool fixings_respected = true;
    mpq_class objective;
    std::vector<std::string> violations;
    std::string render() const;
};

/// Exact re-check of every constraint and the objective, in rational
/// arithmetic; violations are listed exhaustively.
CheckReport check_solution(const IlpModel& model, const Assignment& assignment);

}  // namespace subcode
