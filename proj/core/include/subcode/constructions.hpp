#pragma once

#include <vector>

#include "subcode/codes.hpp"

namespace subcode {

/// Parameters of a binary Gabidulin code over F_16 (the extension degree is
/// fixed at m = 4, with F_16 realized as binary polynomials mod x^4 + x + 1).
/// Codewords are evaluations of q-linearized polynomials of q-degree < k' at
/// the first n of the evaluation points {1, x, x^2, x^3}, expanded over F_2.
struct GabidulinSpec {
    static constexpr unsigned kExtensionDegree = 4;
    unsigned points = 0;       // n, number of evaluation points (n <= 4)
    unsigned message_dim = 0;  // k'

    GabidulinSpec(unsigned n, unsigned kprime);
};

/// All q^(m*k') codeword matrices (n x m over F_2); pairwise rank distance
/// >= n - k' + 1.
std::vector<MatRows> mrd_matrices(const GabidulinSpec& spec);

/// Row space of [I_n | A] for each matrix A (n x (v-n)); subspace distance is
/// twice the rank distance.
SubspaceCode lift(const std::vector<MatRows>& matrices, unsigned v);

/// Convenience: the lifted Gabidulin code with n = k in ambient v = k + 4.
SubspaceCode lifted_mrd_code(unsigned q, unsigned v, unsigned k, unsigned message_dim);

/// Appends the fixed extra codeword spanned by the last n standard basis
/// vectors; it meets every lifted codeword trivially, so the minimum distance
/// is unchanged. Throws when the deterministic rule yields no valid codeword.
SubspaceCode plus_one(const SubspaceCode& lifted);

}  // namespace subcode
