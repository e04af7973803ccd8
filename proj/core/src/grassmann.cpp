#include "subcode/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace subcode {

namespace {

std::vector<unsigned> leading_cols(const MatRows& basis) {
    std::vector<unsigned> cols(basis.rows());
    for (unsigned r = 0; r < basis.rows(); ++r) cols[r] = basis.leading_col(r);
    return cols;
}

void require_same_space(const Subspace& u, const Subspace& w, const char* op) {
    if (u.ambient() != w.ambient() || !(u.field() == w.field())) {
        throw std::invalid_argument(std::string(op) + ": ambient space or field mismatch");
    }
}

}  // namespace

Subspace Subspace::from_rows(const MatRows& rows) {
    return Subspace(rref(rows).matrix);
}

bool Subspace::operator<(const Subspace& o) const {
    if (field().q != o.field().q) return field().q < o.field().q;
    if (ambient() != o.ambient()) return ambient() < o.ambient();
    if (dim() != o.dim()) return dim() < o.dim();
    const std::vector<unsigned> pa = leading_cols(basis);
    const std::vector<unsigned> pb = leading_cols(o.basis);
    if (pa != pb) return pa < pb;
    // identical pivot pattern: compare free entries row-major
    for (unsigned r = 0; r < dim(); ++r) {
        for (unsigned c = pa[r] + 1; c < ambient(); ++c) {
            if (std::find(pa.begin(), pa.end(), c) != pa.end()) continue;
            std::uint8_t x = basis.get(r, c), y = o.basis.get(r, c);
            if (x != y) return x < y;
        }
    }
    return false;
}

mpz_class gaussian_binomial(unsigned v, unsigned k, unsigned q) {
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (k > v) throw std::invalid_argument("gaussian_binomial: k > v");
    const mpz_class base = q;
    mpz_class result = 1;
    // prefix after step i equals [v-k+i, i]_q, so every division is exact
    for (unsigned i = 1; i <= k; ++i) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), v - k + i);
        num -= 1;
        mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), i);
        den -= 1;
        result *= num;
        mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), den.get_mpz_t());
    }
    return result;
}

unsigned subspace_distance(const Subspace& u, const Subspace& w) {
    require_same_space(u, w, "subspace_distance");
    return 2 * stack_rank(u.basis, w.basis) - u.dim() - w.dim();
}

unsigned intersect_dim(const Subspace& u, const Subspace& w) {
    require_same_space(u, w, "intersect_dim");
    return u.dim() + w.dim() - stack_rank(u.basis, w.basis);
}

Subspace meet(const Subspace& u, const Subspace& w) {
    require_same_space(u, w, "meet");
    const unsigned v = u.ambient();
    // Zassenhaus: rref of [U | U; W | 0]; rows with zero left half carry the
    // intersection on the right.
    MatRows m(u.field(), u.dim() + w.dim(), 2 * v);
    for (unsigned r = 0; r < u.dim(); ++r) {
        for (unsigned c = 0; c < v; ++c) {
            std::uint8_t e = u.basis.get(r, c);
            if (e) {
                m.set(r, c, e);
                m.set(r, v + c, e);
            }
        }
    }
    for (unsigned r = 0; r < w.dim(); ++r) {
        for (unsigned c = 0; c < v; ++c) {
            std::uint8_t e = w.basis.get(r, c);
            if (e) m.set(u.dim() + r, c, e);
        }
    }
    RrefResult red = rref(m);
    std::vector<unsigned> inter_rows;
    for (unsigned r = 0; r < red.rank; ++r) {
        if (red.matrix.leading_col(r) >= v) inter_rows.push_back(r);
    }
    MatRows inter(u.field(), static_cast<unsigned>(inter_rows.size()), v);
    for (unsigned i = 0; i < inter_rows.size(); ++i) {
        for (unsigned c = 0; c < v; ++c) inter.set(i, c, red.matrix.get(inter_rows[i], v + c));
    }
    return Subspace::from_rows(inter);
}

Subspace join(const Subspace& u, const Subspace& w) {
    require_same_space(u, w, "join");
    return Subspace::from_rows(stack(u.basis, w.basis));
}

Subspace dual(const Subspace& u) {
    const unsigned v = u.ambient();
    const unsigned k = u.dim();
    const FieldSpec f = u.field();
    const std::vector<unsigned> pivots = leading_cols(u.basis);
    std::vector<bool> is_pivot(v, false);
    for (unsigned p : pivots) is_pivot[p] = true;
    MatRows kernel(f, v - k, v);
    unsigned row = 0;
    for (unsigned c = 0; c < v; ++c) {
        if (is_pivot[c]) continue;
        kernel.set(row, c, 1);
        for (unsigned i = 0; i < k; ++i) {
            std::uint8_t e = u.basis.get(i, c);
            if (e) kernel.set(row, pivots[i], f.neg(e));
        }
        ++row;
    }
    return Subspace::from_rows(kernel);
}

bool incident(const Subspace& u, const Subspace& x) {
    require_same_space(u, x, "incident");
    return stack_rank(u.basis, x.basis) == std::max(u.dim(), x.dim());
}

Grassmannian::Grassmannian(FieldSpec field, unsigned v, unsigned k, unsigned ambient_cap)
    : field_(field), v_(v), k_(k) {
    if (v == 0) throw std::invalid_argument("Grassmannian: ambient dimension must be >= 1");
    if (k > v) throw std::invalid_argument("Grassmannian: k > v");
    if (v > ambient_cap) {
        throw std::invalid_argument("Grassmannian: ambient dimension " + std::to_string(v) +
                                    " exceeds cap " + std::to_string(ambient_cap));
    }
    const unsigned q = field_.q;
    total_ = 0;
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    bool more = true;
    std::uint64_t offset = 0;
    while (more) {
        Pattern pat;
        pat.pivots = idx;
        for (unsigned p : idx) pat.mask |= (std::uint32_t{1} << p);
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned j = idx[i] + 1; j < v; ++j) {
                if (pat.mask & (std::uint32_t{1} << j)) continue;
                pat.free_pos.emplace_back(i, j);
            }
        }
        mpz_class size;
        mpz_ui_pow_ui(size.get_mpz_t(), q, pat.free_pos.size());
        total_ += size;
        if (fits_u64_ && size.fits_ulong_p() && total_.fits_ulong_p()) {
            pat.size = mpz_get_ui(size.get_mpz_t());
            pat.offset = offset;
            offset += pat.size;
        } else {
            fits_u64_ = false;
        }
        patterns_.push_back(std::move(pat));
        // next k-combination of {0..v-1} in lexicographic order
        if (k == 0) break;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[i] == v - k + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++idx[i];
            for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

std::uint64_t Grassmannian::count_u64() const {
    if (!fits_u64_) throw std::overflow_error("Grassmannian: count does not fit in 64 bits");
    return mpz_get_ui(total_.get_mpz_t());
}

const Grassmannian::Pattern* Grassmannian::pattern_of(std::uint32_t mask) const {
    for (const Pattern& p : patterns_) {
        if (p.mask == mask) return &p;
    }
    return nullptr;
}

std::uint64_t Grassmannian::index_of(const Subspace& s) const {
    if (!fits_u64_) throw std::overflow_error("Grassmannian::index_of: count does not fit in 64 bits");
    if (s.ambient() != v_ || s.dim() != k_ || !(s.field() == field_)) {
        throw std::invalid_argument("Grassmannian::index_of: subspace parameters mismatch");
    }
    std::uint32_t mask = 0;
    for (unsigned r = 0; r < k_; ++r) mask |= (std::uint32_t{1} << s.basis.leading_col(r));
    const Pattern* pat = pattern_of(mask);
    if (pat == nullptr) throw std::logic_error("Grassmannian::index_of: basis not in canonical form");
    std::uint64_t value = 0;
    for (const auto& [r, c] : pat->free_pos) value = value * field_.q + s.basis.get(r, c);
    return pat->offset + value;
}

std::uint64_t Grassmannian::index_of_rref_words(std::span<const std::uint64_t> rows) const {
    if (!fits_u64_) throw std::overflow_error("Grassmannian::index_of_rref_words: count does not fit in 64 bits");
    if (field_.q != 2 || v_ > 64 || rows.size() != k_) {
        throw std::invalid_argument("Grassmannian::index_of_rref_words: q = 2 packed rows expected");
    }
    std::uint32_t mask = 0;
    for (std::uint64_t w : rows) mask |= std::uint32_t{1} << std::countr_zero(w);
    const Pattern* pat = pattern_of(mask);
    if (pat == nullptr) throw std::logic_error("Grassmannian::index_of_rref_words: rows not in canonical form");
    std::uint64_t value = 0;
    for (const auto& [r, c] : pat->free_pos) value = 2 * value + ((rows[r] >> c) & 1u);
    return pat->offset + value;
}

Subspace Grassmannian::at(std::uint64_t index) const {
    if (!fits_u64_) throw std::overflow_error("Grassmannian::at: count does not fit in 64 bits");
    if (index >= count_u64()) throw std::out_of_range("Grassmannian::at: index out of range");
    std::size_t lo = 0, hi = patterns_.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (patterns_[mid].offset <= index) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    const Pattern& pat = patterns_[lo];
    std::uint64_t local = index - pat.offset;
    MatRows basis(field_, k_, v_);
    for (unsigned i = 0; i < k_; ++i) basis.set(i, pat.pivots[i], 1);
    std::uint64_t pw = pat.size / (pat.free_pos.empty() ? 1 : field_.q);
    if (!pat.free_pos.empty()) {
        for (const auto& [r, c] : pat.free_pos) {
            basis.set(r, c, static_cast<std::uint8_t>(local / pw));
            local %= pw;
            pw /= field_.q;
            if (pw == 0) pw = 1;
        }
    }
    Subspace s(std::move(basis));
    s.index = index;
    return s;
}

void Grassmannian::for_each(const std::function<void(const Subspace&)>& f) const {
    const unsigned q = field_.q;
    std::uint64_t running = 0;
    for (const Pattern& pat : patterns_) {
        MatRows basis(field_, k_, v_);
        for (unsigned i = 0; i < k_; ++i) basis.set(i, pat.pivots[i], 1);
        std::vector<std::uint8_t> digits(pat.free_pos.size(), 0);
        Subspace scratch(std::move(basis));
        bool more = true;
        while (more) {
            scratch.index = fits_u64_ ? std::optional<std::uint64_t>(running) : std::nullopt;
            f(scratch);
            ++running;
            // odometer increment, last free position fastest
            more = false;
            for (std::size_t t = digits.size(); t-- > 0;) {
                const auto& [r, c] = pat.free_pos[t];
                if (++digits[t] < q) {
                    scratch.basis.set(r, c, digits[t]);
                    more = true;
                    break;
                }
                digits[t] = 0;
                scratch.basis.set(r, c, 0);
            }
        }
    }
}

GrassmannianIter Grassmannian::iter() const {
    return GrassmannianIter(*this);
}

std::vector<Subspace> Grassmannian::materialize() const {
    if (total_ > kMaterializeCap) {
        throw std::invalid_argument("Grassmannian::materialize: count " + total_.get_str() +
                                    " exceeds materialization cap " + std::to_string(kMaterializeCap));
    }
    std::vector<Subspace> out;
    out.reserve(mpz_get_ui(total_.get_mpz_t()));
    for_each([&out](const Subspace& s) { out.push_back(s); });
    return out;
}

GrassmannianIter::GrassmannianIter(const Grassmannian& g) : g_(&g) {}

std::optional<Subspace> GrassmannianIter::next() {
    while (pattern_idx_ < g_->patterns_.size()) {
        const Grassmannian::Pattern& pat = g_->patterns_[pattern_idx_];
        if (pattern_fresh_) {
            MatRows basis(g_->field_, g_->k_, g_->v_);
            for (unsigned i = 0; i < g_->k_; ++i) basis.set(i, pat.pivots[i], 1);
            scratch_ = basis;
            digits_.assign(pat.free_pos.size(), 0);
            pattern_fresh_ = false;
        } else {
            bool carried = false;
            for (std::size_t t = digits_.size(); t-- > 0;) {
                const auto& [r, c] = pat.free_pos[t];
                if (++digits_[t] < g_->field_.q) {
                    scratch_->set(r, c, digits_[t]);
                    carried = true;
                    break;
                }
                digits_[t] = 0;
                scratch_->set(r, c, 0);
            }
            if (!carried) {
                ++pattern_idx_;
                pattern_fresh_ = true;
                continue;
            }
        }
        Subspace s(*scratch_);
        s.index = g_->fits_u64_ ? std::optional<std::uint64_t>(yielded_) : std::nullopt;
        ++yielded_;
        return s;
    }
    return std::nullopt;
}

}  // namespace subcode
