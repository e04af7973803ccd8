#pragma once

// Shared oracles for the test suites. Everything here is deliberately
// independent of the library's computation paths: naive eliminations,
// exhaustive vector scans and plain DFS searches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "subcode/clique_engine.hpp"
#include "subcode/codes.hpp"
#include "subcode/gf_linalg.hpp"
#include "subcode/grassmann.hpp"

namespace testsupport {

using subcode::ConflictGraph;
using subcode::FieldSpec;
using subcode::MatRows;
using subcode::Subspace;

using ByteMatrix = std::vector<std::vector<int>>;

inline ByteMatrix to_bytes(const MatRows& m) {
    ByteMatrix rows(m.rows(), std::vector<int>(m.cols(), 0));
    for (unsigned r = 0; r < m.rows(); ++r) {
        for (unsigned c = 0; c < m.cols(); ++c) rows[r][c] = m.get(r, c);
    }
    return rows;
}

/// Fraction-free Gaussian elimination rank oracle: integer cross
/// multiplication only, no modular inverses.
inline unsigned naive_rank_fraction_free(unsigned q, ByteMatrix rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    unsigned rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] % q == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            const int a = rows[row][col] % static_cast<int>(q);
            const int b = rows[r][col] % static_cast<int>(q);
            if (b == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                rows[r][c] = ((rows[r][c] * a - rows[row][c] * b) % static_cast<int>(q) + static_cast<int>(q * q)) %
                             static_cast<int>(q);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Plain byte-wise RREF, the comparison partner for the bit-packed path.
inline ByteMatrix naive_rref_bytes(unsigned q, ByteMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    auto inv = [&](int a) {
        for (int x = 1; x < static_cast<int>(q); ++x) {
            if (a * x % static_cast<int>(q) == 1) return x;
        }
        return 0;
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        const int scale = inv(rows[row][col]);
        for (std::size_t c = 0; c < cols; ++c) rows[row][c] = rows[row][c] * scale % static_cast<int>(q);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            const int factor = rows[r][col];
            for (std::size_t c = 0; c < cols; ++c) {
                rows[r][c] = ((rows[r][c] - factor * rows[row][c]) % static_cast<int>(q) + static_cast<int>(q * q)) %
                             static_cast<int>(q);
            }
        }
        ++row;
    }
    while (!rows.empty()) {
        bool zero = true;
        for (int e : rows.back()) zero = zero && e == 0;
        if (!zero) break;
        rows.pop_back();
    }
    return rows;
}

/// All q^k vectors of the row space, as digit vectors. Exhaustive by design.
inline std::set<std::vector<int>> span_vectors(const Subspace& s) {
    const unsigned q = s.field().q;
    const unsigned k = s.dim();
    const unsigned v = s.ambient();
    std::set<std::vector<int>> out;
    std::vector<int> combo(k, 0);
    while (true) {
        std::vector<int> vec(v, 0);
        for (unsigned r = 0; r < k; ++r) {
            for (unsigned c = 0; c < v; ++c) vec[c] = (vec[c] + combo[r] * s.basis.get(r, c)) % static_cast<int>(q);
        }
        out.insert(vec);
        unsigned t = 0;
        while (t < k && ++combo[t] == static_cast<int>(q)) combo[t++] = 0;
        if (t == k) break;
    }
    return out;
}

/// log_q of the exhaustively counted intersection.
inline unsigned naive_intersection_dim(const Subspace& a, const Subspace& b) {
    const auto va = span_vectors(a);
    const auto vb = span_vectors(b);
    std::size_t common = 0;
    for (const auto& vec : va) common += vb.count(vec);
    const unsigned q = a.field().q;
    unsigned dim = 0;
    std::size_t power = 1;
    while (power < common) {
        power *= q;
        ++dim;
    }
    return dim;
}

inline unsigned naive_distance(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - 2 * naive_intersection_dim(a, b);
}

inline bool naive_incident(const Subspace& u, const Subspace& x) {
    const auto vu = span_vectors(u);
    const auto vx = span_vectors(x);
    return std::includes(vx.begin(), vx.end(), vu.begin(), vu.end()) ||
           std::includes(vu.begin(), vu.end(), vx.begin(), vx.end());
}

inline MatRows random_matrix(std::mt19937_64& rng, unsigned q, unsigned rows, unsigned cols) {
    MatRows m(FieldSpec(q), rows, cols);
    for (unsigned r = 0; r < rows; ++r) {
        for (unsigned c = 0; c < cols; ++c) m.set(r, c, static_cast<std::uint8_t>(rng() % q));
    }
    return m;
}

inline Subspace random_subspace(std::mt19937_64& rng, unsigned q, unsigned v, unsigned k) {
    while (true) {
        Subspace s = Subspace::from_rows(random_matrix(rng, q, k, v));
        if (s.dim() == k) return s;
    }
}

/// Plain DFS maximum clique with only the |C|+|P| prune; the independent
/// cross-check for the branch-and-bound engine.
struct NaiveClique {
    const ConflictGraph& g;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> current;

    explicit NaiveClique(const ConflictGraph& graph) : g(graph) {}

    void dfs(std::vector<std::uint32_t> candidates) {
        if (current.size() > best.size()) best = current;
        if (current.size() + candidates.size() <= best.size()) return;
        while (!candidates.empty()) {
            if (current.size() + candidates.size() <= best.size()) return;
            std::uint32_t v = candidates.back();
            candidates.pop_back();
            std::vector<std::uint32_t> next;
            for (std::uint32_t w : candidates) {
                if (g.edge(v, w)) next.push_back(w);
            }
            current.push_back(v);
            dfs(std::move(next));
            current.pop_back();
        }
    }

    std::size_t solve() {
        std::vector<std::uint32_t> all(g.order());
        for (std::uint32_t v = 0; v < g.order(); ++v) all[v] = v;
        dfs(std::move(all));
        return best.size();
    }
};

/// Exhaustive check that no clique of size `size` exists (small graphs only).
inline bool exists_clique_of_size(const ConflictGraph& g, unsigned size) {
    std::vector<std::uint32_t> pick;
    const std::uint32_t n = g.order();
    std::function<bool(std::uint32_t)> rec = [&](std::uint32_t start) -> bool {
        if (pick.size() == size) return true;
        for (std::uint32_t v = start; v < n; ++v) {
            bool ok = true;
            for (std::uint32_t u : pick) ok = ok && g.edge(u, v);
            if (!ok) continue;
            pick.push_back(v);
            if (rec(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace testsupport
