#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace subcode {

/// A known-values record for A_q(v,d;K). Keys are canonical under the
/// orthogonal symmetry K <-> v-K, so a query for either resolves to the
/// same record.
struct BoundsRecord {
    std::optional<mpz_class> lower;
    std::optional<mpz_class> upper;
    std::string provenance;
};

class BoundsDb {
  public:
    /// The seed table of known values (exact entries and intervals).
    static BoundsDb seed_table();

    /// Line-oriented text format: `q v d K lower upper # provenance`,
    /// K comma-joined, `?` for unknown; `#` starts a comment.
    static BoundsDb load(std::istream& in);
    static BoundsDb load_file(const std::string& path);
    void save(std::ostream& out) const;

    void set(unsigned q, unsigned v, unsigned d, const std::set<unsigned>& dims,
             std::optional<mpz_class> lower, std::optional<mpz_class> upper, std::string provenance);
    std::optional<BoundsRecord> lookup(unsigned q, unsigned v, unsigned d, const std::set<unsigned>& dims) const;
    std::optional<BoundsRecord> lookup(unsigned q, unsigned v, unsigned d, unsigned k) const;

    std::size_t size() const { return records_.size(); }

  private:
    struct Key {
        unsigned q, v, d;
        std::vector<unsigned> dims;  // canonical: lexicographic min of K and v-K
        bool operator<(const Key& o) const;
    };
    static Key canonical_key(unsigned q, unsigned v, unsigned d, const std::set<unsigned>& dims);

    std::map<Key, BoundsRecord> records_;
};

enum class BoundMethod {
    johnson,
    partial_spread,
    degree,
    double_count,
    one_incidence,
    pair_threshold,
    db_lookup,
    trivial,
};

std::string to_string(BoundMethod m);

struct BoundResult {
    mpz_class value;
    BoundMethod method = BoundMethod::trivial;
    std::string derivation;  // names every db entry and formula used
};

/// Beutelspacher's maximum partial-spread size (q^v - q)/(q^k - 1) - q + 1;
/// requires v = 1 (mod k) and 2 <= k <= v.
mpz_class partial_spread_size(unsigned q, unsigned v, unsigned k);

/// One Johnson recursion step floor((q^v-1)/(q^k-1) * A_q(v-1,d;k-1)) with the
/// inner value resolved through the db (exact entries only) and further
/// recursion; for d = 2k with v = 1 (mod k) returns the tighter of the chain
/// and the partial-spread value.
BoundResult johnson_bound(unsigned q, unsigned v, unsigned d, unsigned k, const BoundsDb& db);

/// Best available upper bound for A_q(v,d;k): exact db entries first, then
/// recursion bottoming in spread/partial-spread/trivial cases, finally capped
/// by an inexact db upper when tighter. This is the rhs resolver for models.
BoundResult resolve_upper(unsigned q, unsigned v, unsigned d, unsigned k, const BoundsDb& db);

/// Bound on #I(C,X) for a (v,N,d;k)_q cdc and dim(X) = dim_x.
mpz_class degree_bound(unsigned q, unsigned v, unsigned d, unsigned k, unsigned dim_x, const BoundsDb& db);

/// N <= floor([v,l]_q b / [k,l]_q) (l <= k) or floor([v,l]_q b / [v-k,l-k]_q).
mpz_class double_count_bound(unsigned q, unsigned v, unsigned k, unsigned l, const mpz_class& b);

/// N <= (q^k+1)(q^k+1-c) for a (2k,N,2k-2;k)_q cdc with all points or all
/// hyperplanes incident to at most q^k+1-c codewords.
mpz_class one_incidence_bound(unsigned q, unsigned k, unsigned c);

/// Exact rational (q^v-1)(b-1)/(q^{v-k}+q^k-2); any larger set of k-spaces
/// admits a non-incident point/hyperplane pair with combined incidence >= b.
mpq_class pair_threshold(unsigned q, unsigned v, unsigned k, const mpz_class& b);

struct CascadeReport {
    mpz_class lhs;  // (k-1)-route Johnson value
    mpz_class rhs;  // (k+1)-route value from the improved upper bound
    bool holds = false;
    std::string text;
};

/// Integer verification of the no-improvement chain: the (k-1)-route Johnson
/// bound on A_q(2k+1,2k-2;k) never loses to the route through an improved
/// A_q(2k,2k-2;k) upper bound.
CascadeReport johnson_cascade_check(unsigned q, unsigned k, const mpz_class& improved_upper);

}  // namespace subcode
