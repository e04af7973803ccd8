#include "subcode/constructions.hpp"

#include <stdexcept>

namespace subcode {

namespace {

// F_16 as 4-bit polynomials modulo x^4 + x + 1.
std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & 0x10) a ^= 0x13;
    }
    return r;
}

std::uint8_t gf16_frob_pow(std::uint8_t a, unsigned j) {
    for (unsigned i = 0; i < j; ++i) a = gf16_mul(a, a);
    return a;
}

}  // namespace

GabidulinSpec::GabidulinSpec(unsigned n, unsigned kprime) : points(n), message_dim(kprime) {
    if (message_dim < 1 || message_dim > points || points > kExtensionDegree) {
        throw std::invalid_argument("GabidulinSpec: requires 1 <= k' <= n <= 4");
    }
}

std::vector<MatRows> mrd_matrices(const GabidulinSpec& spec) {
    const unsigned n = spec.points;
    const unsigned m = GabidulinSpec::kExtensionDegree;
    const unsigned kp = spec.message_dim;
    // evaluation points 1, x, x^2, x^3: linearly independent over F_2
    std::uint8_t points[4] = {1, 2, 4, 8};
    std::uint64_t total = 1;
    for (unsigned j = 0; j < kp; ++j) total *= 16;

    const FieldSpec f2(2);
    std::vector<MatRows> out;
    out.reserve(total);
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        std::uint8_t coeff[4] = {0, 0, 0, 0};
        std::uint64_t rest = msg;
        for (unsigned j = 0; j < kp; ++j) {
            coeff[j] = static_cast<std::uint8_t>(rest & 0xf);
            rest >>= 4;
        }
        MatRows mat(f2, n, m);
        for (unsigned i = 0; i < n; ++i) {
            std::uint8_t value = 0;
            for (unsigned j = 0; j < kp; ++j) value ^= gf16_mul(coeff[j], gf16_frob_pow(points[i], j));
            for (unsigned bit = 0; bit < m; ++bit) {
                if (value & (1u << bit)) mat.set(i, bit, 1);
            }
        }
        out.push_back(std::move(mat));
    }
    return out;
}

SubspaceCode lift(const std::vector<MatRows>& matrices, unsigned v) {
    if (matrices.empty()) throw std::invalid_argument("lift: no matrices");
    const unsigned n = matrices.front().rows();
    const FieldSpec field = matrices.front().field();
    std::vector<Subspace> words;
    words.reserve(matrices.size());
    for (const MatRows& a : matrices) {
        if (a.rows() != n || a.cols() != v - n) {
            throw std::invalid_argument("lift: matrix shape is not n x (v-n)");
        }
        MatRows basis(field, n, v);
        for (unsigned r = 0; r < n; ++r) {
            basis.set(r, r, 1);
            for (unsigned c = 0; c < v - n; ++c) {
                std::uint8_t e = a.get(r, c);
                if (e) basis.set(r, n + c, e);
            }
        }
        words.push_back(Subspace::from_rows(basis));
    }
    return SubspaceCode::from_subspaces(field, v, std::move(words));
}

SubspaceCode lifted_mrd_code(unsigned q, unsigned v, unsigned k, unsigned message_dim) {
    if (q != 2) throw std::invalid_argument("lifted_mrd_code: only q = 2 is supported");
    if (v != k + GabidulinSpec::kExtensionDegree) {
        throw std::invalid_argument("lifted_mrd_code: requires v = k + 4");
    }
    return lift(mrd_matrices(GabidulinSpec(k, message_dim)), v);
}

SubspaceCode plus_one(const SubspaceCode& lifted) {
    const auto dims = lifted.dimension_set();
    if (dims.size() != 1) throw std::invalid_argument("plus_one: input is not constant dimension");
    const unsigned n = *dims.begin();
    const unsigned v = lifted.ambient();
    if (v < 2 * n) {
        throw std::invalid_argument("plus_one: no room for an extra codeword in the complement coordinates");
    }
    for (const Subspace& u : lifted.codewords()) {
        for (unsigned r = 0; r < n; ++r) {
            if (u.basis.leading_col(r) != r) {
                throw std::invalid_argument("plus_one: input is not a lifted code [I_n | A]");
            }
        }
    }
    MatRows extra(lifted.field(), n, v);
    for (unsigned r = 0; r < n; ++r) extra.set(r, v - n + r, 1);
    Subspace extra_word(std::move(extra));

    const std::optional<unsigned> before = lifted.min_distance();
    for (const Subspace& u : lifted.codewords()) {
        unsigned dist = subspace_distance(extra_word, u);
        if (before && dist < *before) {
            throw std::invalid_argument("plus_one: deterministic extra codeword would reduce the minimum distance");
        }
    }
    std::vector<Subspace> words = lifted.codewords();
    words.push_back(std::move(extra_word));
    return SubspaceCode::from_subspaces(lifted.field(), v, std::move(words));
}

}  // namespace subcode
