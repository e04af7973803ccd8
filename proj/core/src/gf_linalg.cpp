#include "subcode/gf_linalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace subcode {

FieldSpec::FieldSpec(unsigned order) {
    if (order != 2 && order != 3 && order != 5 && order != 7) {
        throw std::invalid_argument("FieldSpec: unsupported field order " + std::to_string(order) +
                                    " (supported: 2, 3, 5, 7)");
    }
    q = static_cast<std::uint8_t>(order);
}

std::uint8_t FieldSpec::inv(std::uint8_t a) const {
    if (a == 0) throw std::domain_error("FieldSpec::inv: zero has no inverse");
    for (std::uint8_t x = 1; x < q; ++x) {
        if (mul(a, x) == 1) return x;
    }
    throw std::logic_error("FieldSpec::inv: unreachable");
}

MatRows::MatRows(FieldSpec field, unsigned rows, unsigned cols) : field_(field), rows_(rows), cols_(cols) {
    if (cols == 0) throw std::invalid_argument("MatRows: cols must be >= 1");
    if (is_binary()) {
        wpr_ = (cols + 63) / 64;
        bits_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
    } else {
        bytes_.assign(static_cast<std::size_t>(rows) * cols, 0);
    }
}

std::uint8_t MatRows::get(unsigned r, unsigned c) const {
    if (is_binary()) {
        return (bits_[static_cast<std::size_t>(r) * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    return bytes_[static_cast<std::size_t>(r) * cols_ + c];
}

void MatRows::set(unsigned r, unsigned c, std::uint8_t value) {
    if (value >= field_.q) throw std::invalid_argument("MatRows::set: entry not in {0..q-1}");
    if (is_binary()) {
        std::uint64_t& w = bits_[static_cast<std::size_t>(r) * wpr_ + c / 64];
        w = (w & ~(std::uint64_t{1} << (c % 64))) | (std::uint64_t(value) << (c % 64));
    } else {
        bytes_[static_cast<std::size_t>(r) * cols_ + c] = value;
    }
}

std::string MatRows::digit_row(unsigned r) const {
    std::string s(cols_, '0');
    for (unsigned c = 0; c < cols_; ++c) s[c] = static_cast<char>('0' + get(r, c));
    return s;
}

void MatRows::swap_rows(unsigned a, unsigned b) {
    if (a == b) return;
    if (is_binary()) {
        for (unsigned w = 0; w < wpr_; ++w) {
            std::swap(bits_[static_cast<std::size_t>(a) * wpr_ + w], bits_[static_cast<std::size_t>(b) * wpr_ + w]);
        }
    } else {
        for (unsigned c = 0; c < cols_; ++c) {
            std::swap(bytes_[static_cast<std::size_t>(a) * cols_ + c], bytes_[static_cast<std::size_t>(b) * cols_ + c]);
        }
    }
}

void MatRows::add_multiple(unsigned dst, unsigned src, std::uint8_t factor) {
    if (factor == 0) return;
    if (is_binary()) {
        for (unsigned w = 0; w < wpr_; ++w) {
            bits_[static_cast<std::size_t>(dst) * wpr_ + w] ^= bits_[static_cast<std::size_t>(src) * wpr_ + w];
        }
    } else {
        for (unsigned c = 0; c < cols_; ++c) {
            std::uint8_t& e = bytes_[static_cast<std::size_t>(dst) * cols_ + c];
            e = field_.add(e, field_.mul(factor, bytes_[static_cast<std::size_t>(src) * cols_ + c]));
        }
    }
}

void MatRows::scale_row(unsigned r, std::uint8_t factor) {
    if (is_binary()) return;  // only factor 1 possible
    for (unsigned c = 0; c < cols_; ++c) {
        std::uint8_t& e = bytes_[static_cast<std::size_t>(r) * cols_ + c];
        e = field_.mul(e, factor);
    }
}

bool MatRows::row_is_zero(unsigned r) const {
    if (is_binary()) {
        for (unsigned w = 0; w < wpr_; ++w) {
            if (bits_[static_cast<std::size_t>(r) * wpr_ + w]) return false;
        }
        return true;
    }
    for (unsigned c = 0; c < cols_; ++c) {
        if (bytes_[static_cast<std::size_t>(r) * cols_ + c]) return false;
    }
    return true;
}

unsigned MatRows::leading_col(unsigned r) const {
    if (is_binary()) {
        for (unsigned w = 0; w < wpr_; ++w) {
            std::uint64_t word = bits_[static_cast<std::size_t>(r) * wpr_ + w];
            if (word) return w * 64 + static_cast<unsigned>(std::countr_zero(word));
        }
        return cols_;
    }
    for (unsigned c = 0; c < cols_; ++c) {
        if (bytes_[static_cast<std::size_t>(r) * cols_ + c]) return c;
    }
    return cols_;
}

MatRows MatRows::take_rows(unsigned count) const {
    MatRows out(field_, count, cols_);
    if (is_binary()) {
        std::copy(bits_.begin(), bits_.begin() + static_cast<std::size_t>(count) * wpr_, out.bits_.begin());
    } else {
        std::copy(bytes_.begin(), bytes_.begin() + static_cast<std::size_t>(count) * cols_, out.bytes_.begin());
    }
    return out;
}

bool MatRows::operator==(const MatRows& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_ && bytes_ == o.bytes_;
}

bool MatRows::operator<(const MatRows& o) const {
    if (field_.q != o.field_.q) return field_.q < o.field_.q;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    if (rows_ != o.rows_) return rows_ < o.rows_;
    for (unsigned r = 0; r < rows_; ++r) {
        for (unsigned c = 0; c < cols_; ++c) {
            std::uint8_t a = get(r, c), b = o.get(r, c);
            if (a != b) return a < b;
        }
    }
    return false;
}

std::size_t MatRows::hash_value() const {
    std::uint64_t h = 1469598103934665603ull ^ (std::uint64_t(field_.q) << 32) ^ (std::uint64_t(rows_) << 16) ^ cols_;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (std::uint64_t w : bits_) mix(w);
    for (std::uint8_t b : bytes_) mix(b);
    return static_cast<std::size_t>(h);
}

RrefResult rref(const MatRows& m) {
    MatRows work = m;
    const unsigned rows = work.rows();
    const unsigned cols = work.cols();
    const FieldSpec f = work.field();
    std::vector<unsigned> pivots;
    unsigned r = 0;
    for (unsigned c = 0; c < cols && r < rows; ++c) {
        unsigned pivot_row = rows;
        for (unsigned i = r; i < rows; ++i) {
            if (work.get(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows) continue;
        work.swap_rows(r, pivot_row);
        std::uint8_t lead = work.get(r, c);
        if (lead != 1) work.scale_row(r, f.inv(lead));
        for (unsigned i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint8_t e = work.get(i, c);
            if (e != 0) work.add_multiple(i, r, f.neg(e));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{work.take_rows(r), r, std::move(pivots)};
}

unsigned rank_of(const MatRows& m) {
    return rref(m).rank;
}

MatRows stack(const MatRows& a, const MatRows& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field())) {
        throw std::invalid_argument("stack: column count or field mismatch");
    }
    MatRows out(a.field(), a.rows() + b.rows(), a.cols());
    for (unsigned r = 0; r < a.rows(); ++r) {
        for (unsigned c = 0; c < a.cols(); ++c) out.set(r, c, a.get(r, c));
    }
    for (unsigned r = 0; r < b.rows(); ++r) {
        for (unsigned c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.get(r, c));
    }
    return out;
}

unsigned stack_rank(const MatRows& a, const MatRows& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field())) {
        throw std::invalid_argument("stack_rank: column count or field mismatch");
    }
    if (a.is_binary() && a.cols() <= 64) {
        std::array<std::uint64_t, 64> buf_a;
        std::array<std::uint64_t, 64> buf_b;
        for (unsigned r = 0; r < a.rows(); ++r) buf_a[r] = a.row_word(r);
        for (unsigned r = 0; r < b.rows(); ++r) buf_b[r] = b.row_word(r);
        return rank2_words({buf_a.data(), a.rows()}, {buf_b.data(), b.rows()});
    }
    return rank_of(stack(a, b));
}

unsigned rref2_words(std::span<std::uint64_t> rows) {
    std::uint64_t by_lead[64] = {0};
    unsigned leads[64];
    unsigned rank = 0;
    for (std::uint64_t w : rows) {
        while (w) {
            unsigned lead = static_cast<unsigned>(std::countr_zero(w));
            if (by_lead[lead]) {
                w ^= by_lead[lead];
            } else {
                by_lead[lead] = w;
                leads[rank++] = lead;
                break;
            }
        }
    }
    std::sort(leads, leads + rank);
    // clear pivot columns above their rows
    for (unsigned i = 0; i < rank; ++i) {
        for (unsigned j = i + 1; j < rank; ++j) {
            if (by_lead[leads[i]] & (std::uint64_t{1} << leads[j])) by_lead[leads[i]] ^= by_lead[leads[j]];
        }
    }
    for (unsigned i = 0; i < rank; ++i) rows[i] = by_lead[leads[i]];
    for (std::size_t i = rank; i < rows.size(); ++i) rows[i] = 0;
    return rank;
}

unsigned rank2_words(std::span<const std::uint64_t> rows_a, std::span<const std::uint64_t> rows_b) {
    std::uint64_t basis[64] = {0};
    unsigned rank = 0;
    auto insert = [&](std::uint64_t w) {
        while (w) {
            unsigned lead = static_cast<unsigned>(std::countr_zero(w));
            if (basis[lead]) {
                w ^= basis[lead];
            } else {
                basis[lead] = w;
                ++rank;
                return;
            }
        }
    };
    for (std::uint64_t w : rows_a) insert(w);
    for (std::uint64_t w : rows_b) insert(w);
    return rank;
}

}  // namespace subcode
