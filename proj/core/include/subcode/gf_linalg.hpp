#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subcode {

/// Prime field F_q used by the matrix kernels. Supported orders: 2, 3, 5, 7.
struct FieldSpec {
    std::uint8_t q = 2;

    FieldSpec() = default;
    explicit FieldSpec(unsigned order);

    bool operator==(const FieldSpec&) const = default;

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + b) % q); }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + q - b) % q); }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a * b) % q); }
    std::uint8_t neg(std::uint8_t a) const { return static_cast<std::uint8_t>((q - a) % q); }
    std::uint8_t inv(std::uint8_t a) const;
};

/// Row-major matrix over F_q. Rows over F_2 are bit-packed into 64-bit words
/// (coordinate 1 in the least significant bit); other fields store one byte
/// per entry. Immutable use after construction is thread-safe.
class MatRows {
  public:
    MatRows(FieldSpec field, unsigned rows, unsigned cols);

    FieldSpec field() const { return field_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    bool is_binary() const { return field_.q == 2; }
    unsigned words_per_row() const { return wpr_; }

    std::uint8_t get(unsigned r, unsigned c) const;
    void set(unsigned r, unsigned c, std::uint8_t value);

    /// First 64 columns of row r as a packed word; valid only when q = 2 and cols <= 64.
    std::uint64_t row_word(unsigned r) const { return bits_[static_cast<std::size_t>(r) * wpr_]; }
    void set_row_word(unsigned r, std::uint64_t w) { bits_[static_cast<std::size_t>(r) * wpr_] = w; }
    std::span<const std::uint64_t> row_words(unsigned r) const {
        return {bits_.data() + static_cast<std::size_t>(r) * wpr_, wpr_};
    }

    /// Row r rendered as a length-cols digit string, coordinate 1 leftmost.
    std::string digit_row(unsigned r) const;

    void swap_rows(unsigned a, unsigned b);
    /// row[dst] += factor * row[src]
    void add_multiple(unsigned dst, unsigned src, std::uint8_t factor);
    void scale_row(unsigned r, std::uint8_t factor);
    bool row_is_zero(unsigned r) const;
    /// Column index of the first nonzero entry of row r, or cols() if zero.
    unsigned leading_col(unsigned r) const;

    MatRows take_rows(unsigned count) const;

    bool operator==(const MatRows& o) const;
    /// Deterministic total order: (q, cols, rows, entries row-major).
    bool operator<(const MatRows& o) const;
    std::size_t hash_value() const;

  private:
    FieldSpec field_;
    unsigned rows_ = 0;
    unsigned cols_ = 0;
    unsigned wpr_ = 0;                 // words per row (q = 2 only)
    std::vector<std::uint64_t> bits_;  // q = 2 payload
    std::vector<std::uint8_t> bytes_;  // q > 2 payload, row-major
};

struct RrefResult {
    MatRows matrix;  // reduced row echelon form, zero rows removed
    unsigned rank = 0;
    std::vector<unsigned> pivots;  // strictly increasing column indices
};

/// Unique zero-row-free reduced row echelon form; row space preserved.
RrefResult rref(const MatRows& m);

unsigned rank_of(const MatRows& m);

/// Vertical concatenation; throws on column or field mismatch.
MatRows stack(const MatRows& a, const MatRows& b);

/// rank([a; b]) = dim(U + W) when the rows of a, b are bases of U, W.
unsigned stack_rank(const MatRows& a, const MatRows& b);

/// Allocation-free rank of packed GF(2) rows (cols <= 64); the hot kernel
/// behind distance scans and graph builds.
unsigned rank2_words(std::span<const std::uint64_t> rows_a, std::span<const std::uint64_t> rows_b = {});

/// In-place reduced row echelon form of packed GF(2) rows (cols <= 64).
/// Returns the rank; rows[0..rank) hold the canonical rows, sorted by pivot.
unsigned rref2_words(std::span<std::uint64_t> rows);

}  // namespace subcode
