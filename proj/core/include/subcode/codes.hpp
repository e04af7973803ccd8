#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "subcode/grassmann.hpp"

namespace subcode {

/// Multiplicity of each codeword dimension; renders as "3^17 4^17".
struct DimensionDistribution {
    std::map<unsigned, std::size_t> multiplicities;
    std::string render() const;
};

/// Expected parameters attached to a code file; any field may be absent.
struct ClaimSpec {
    std::optional<std::size_t> size;
    std::optional<unsigned> distance;
    std::optional<std::set<unsigned>> dims;
};

/// An immutable set of subspaces of a common F_q^v. Codewords are kept
/// deduplicated and sorted in canonical order (ascending dimension, then
/// enumeration order), which is also the emit order.
class SubspaceCode {
  public:
    SubspaceCode(FieldSpec field, unsigned ambient);
    static SubspaceCode from_subspaces(FieldSpec field, unsigned ambient, std::vector<Subspace> codewords);

    FieldSpec field() const { return field_; }
    unsigned ambient() const { return v_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Subspace>& codewords() const { return words_; }
    bool contains(const Subspace& s) const;

    std::set<unsigned> dimension_set() const;

    /// Exact minimum pairwise subspace distance, computed once and cached.
    /// nullopt when fewer than two codewords. Refuses above 5000 codewords.
    std::optional<unsigned> min_distance() const;

    static constexpr std::size_t kDistanceScanCap = 5000;

  private:
    struct DistanceCache {
        std::once_flag once;
        std::optional<unsigned> value;
    };

    FieldSpec field_;
    unsigned v_;
    std::vector<Subspace> words_;
    std::shared_ptr<DistanceCache> cache_;
};

struct VerifyReport {
    std::size_t size = 0;
    std::optional<unsigned> min_distance;
    std::set<unsigned> dims;
    bool constant_dimension = false;
    DimensionDistribution distribution;
    bool claim_checked = false;
    bool claim_ok = true;
    std::vector<std::string> claim_mismatches;
    std::string render() const;
};

/// Computes N, the exact minimum distance and the dimension profile; when a
/// claim is supplied, reports per-field match/mismatch.
VerifyReport verify(const SubspaceCode& code, const std::optional<ClaimSpec>& claim = std::nullopt);

DimensionDistribution dimension_distribution(const SubspaceCode& code);

/// Dual of every codeword; parameters (v, N, d; v-K), distance preserved.
SubspaceCode orthogonal_code(const SubspaceCode& code);

/// I(S, X): codewords comparable with x under inclusion.
std::vector<Subspace> incidence_set(const SubspaceCode& code, const Subspace& x);

struct IncidenceProfile {
    std::size_t max = 0;
    std::map<std::size_t, std::size_t> histogram;  // |I(C,X)| -> number of X
};

/// Scans every l-subspace X; requires [v, l]_q within the materialization cap.
IncidenceProfile incidence_profile(const SubspaceCode& code, unsigned l);

/// Shortened code S(C, p, h) in the (v-1)-space h, re-embedded via the basis
/// change that maps the RREF basis of h to the standard basis.
SubspaceCode shorten(const SubspaceCode& code, const Subspace& point, const Subspace& hyperplane);

struct ParsedCode {
    SubspaceCode code;
    std::optional<ClaimSpec> claim;
};

/// Canonical code file format: header `q=<q> v=<v>`, optional
/// `claim N=<N> d=<d> K=<k1,k2>` line, then one codeword per line as
/// comma-separated length-v digit rows (coordinate 1 leftmost); `#` starts a
/// comment; `-` denotes the zero subspace. Parse canonicalizes arbitrary
/// bases; emit is bit-exact and ends with a newline.
ParsedCode parse_code(std::istream& in);
ParsedCode parse_code_file(const std::string& path);
void emit_code(const SubspaceCode& code, std::ostream& out,
               const std::optional<ClaimSpec>& claim = std::nullopt);
std::string emit_code_string(const SubspaceCode& code,
                             const std::optional<ClaimSpec>& claim = std::nullopt);

}  // namespace subcode
