#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "subcode/gf_linalg.hpp"

namespace subcode {

/// A k-dimensional subspace of F_q^v, carried by its unique zero-row-free
/// RREF basis. Two subspaces are equal iff their canonical bases are
/// identical; `index` is the rank in the enumeration order when known.
struct Subspace {
    MatRows basis;
    std::optional<std::uint64_t> index;

    explicit Subspace(MatRows canonical_basis) : basis(std::move(canonical_basis)) {}

    unsigned dim() const { return basis.rows(); }
    unsigned ambient() const { return basis.cols(); }
    FieldSpec field() const { return basis.field(); }

    /// Canonicalizes an arbitrary generating set via rref.
    static Subspace from_rows(const MatRows& rows);

    bool operator==(const Subspace& o) const { return basis == o.basis; }
    /// Total order: ascending dimension, then enumeration order within the
    /// Grassmannian (pivot pattern lex, then free entries lex).
    bool operator<(const Subspace& o) const;
    std::size_t hash_value() const { return basis.hash_value(); }
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const { return s.hash_value(); }
};

/// Number of k-dimensional subspaces of F_q^v, exactly.
mpz_class gaussian_binomial(unsigned v, unsigned k, unsigned q);

/// d_s(U, W) = dim(U) + dim(W) - 2 dim(U meet W); throws on ambient mismatch.
unsigned subspace_distance(const Subspace& u, const Subspace& w);
unsigned intersect_dim(const Subspace& u, const Subspace& w);
Subspace meet(const Subspace& u, const Subspace& w);
Subspace join(const Subspace& u, const Subspace& w);

/// Orthogonal complement under the standard dot product.
Subspace dual(const Subspace& u);

/// U <= X or X <= U.
bool incident(const Subspace& u, const Subspace& x);

class GrassmannianIter;

/// Enumeration support for the k-subspaces of F_q^v. The order is fixed:
/// lexicographic on the strictly increasing pivot-column tuple, then
/// lexicographic on the free entries read row-major (first position most
/// significant). This order defines the variable index x_<i> in exported
/// models.
class Grassmannian {
  public:
    static constexpr unsigned kDefaultAmbientCap = 14;
    static constexpr std::uint64_t kMaterializeCap = 250000;

    Grassmannian(FieldSpec field, unsigned v, unsigned k, unsigned ambient_cap = kDefaultAmbientCap);

    FieldSpec field() const { return field_; }
    unsigned ambient() const { return v_; }
    unsigned dim() const { return k_; }

    const mpz_class& count() const { return total_; }
    bool count_fits_u64() const { return fits_u64_; }
    std::uint64_t count_u64() const;

    /// Rank of a canonical subspace in the enumeration order.
    std::uint64_t index_of(const Subspace& s) const;
    /// q = 2, v <= 64 fast path: rows are the k packed canonical RREF rows.
    std::uint64_t index_of_rref_words(std::span<const std::uint64_t> rows) const;
    Subspace at(std::uint64_t index) const;

    /// Visits every subspace in enumeration order. The argument is a scratch
    /// value reused between calls: copy it if it must outlive the callback.
    void for_each(const std::function<void(const Subspace&)>& f) const;

    GrassmannianIter iter() const;

    /// Materializes the whole Grassmannian; throws above kMaterializeCap.
    std::vector<Subspace> materialize() const;

  private:
    friend class GrassmannianIter;

    struct Pattern {
        std::vector<unsigned> pivots;
        std::uint32_t mask = 0;
        std::vector<std::pair<unsigned, unsigned>> free_pos;  // row-major
        std::uint64_t size = 0;                               // q^(free count), valid when fits_u64_
        std::uint64_t offset = 0;                             // valid when fits_u64_
    };

    const Pattern* pattern_of(std::uint32_t mask) const;

    FieldSpec field_;
    unsigned v_;
    unsigned k_;
    std::vector<Pattern> patterns_;  // lexicographic pivot order
    mpz_class total_;
    bool fits_u64_ = true;
};

/// Single-consumer streaming cursor over a Grassmannian.
class GrassmannianIter {
  public:
    /// Next subspace in enumeration order, or nullopt when exhausted.
    std::optional<Subspace> next();

  private:
    friend class Grassmannian;
    explicit GrassmannianIter(const Grassmannian& g);

    const Grassmannian* g_;
    std::size_t pattern_idx_ = 0;
    std::uint64_t yielded_ = 0;
    std::optional<MatRows> scratch_;
    std::vector<std::uint8_t> digits_;
    bool pattern_fresh_ = true;
};

}  // namespace subcode
