#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "subcode/codes.hpp"

namespace subcode {

/// Undirected conflict graph with bitset adjacency rows. Vertex labels carry
/// the Grassmannian enumeration index of the underlying subspace.
class ConflictGraph {
  public:
    ConflictGraph() = default;
    explicit ConflictGraph(std::uint32_t n);

    std::uint32_t order() const { return n_; }
    std::size_t words_per_row() const { return wpr_; }
    std::uint64_t edge_count() const;

    void add_edge(std::uint32_t u, std::uint32_t w);
    bool edge(std::uint32_t u, std::uint32_t w) const {
        return (adj_[static_cast<std::size_t>(u) * wpr_ + w / 64] >> (w % 64)) & 1u;
    }
    std::span<const std::uint64_t> row(std::uint32_t u) const {
        return {adj_.data() + static_cast<std::size_t>(u) * wpr_, wpr_};
    }
    std::uint32_t degree(std::uint32_t u) const;

    std::vector<std::uint64_t> labels;  // vertex -> subspace enumeration index

  private:
    std::uint32_t n_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Vertices are the given subspaces; u ~ w iff d_s >= min_distance.
/// labels[i] is taken from subspaces[i].index (0 when absent).
ConflictGraph conflict_graph_from_subspaces(const std::vector<Subspace>& subspaces, unsigned min_distance,
                                            unsigned threads = 1);

/// All k-subspaces of F_q^v, joined iff d_s >= d; a maximum clique realizes
/// A_q(v,d;k). Refuses above graph_cap vertices.
ConflictGraph build_distance_graph(unsigned q, unsigned v, unsigned k, unsigned d, unsigned threads = 1,
                                   std::uint64_t graph_cap = 20000);

struct ExtensionGraph {
    ConflictGraph graph;
    std::vector<Subspace> candidates;  // A(C), in enumeration order
};

/// For a verified (7,17,6;3)_2 code: vertex set A(C) (solids at distance >= 5
/// from every codeword), edges at distance >= 6. A 16-clique extends C to a
/// (7,33,5;{3,4})_2 code.
ExtensionGraph build_extension_graph(const SubspaceCode& code, unsigned threads = 1);

struct CliqueBudget {
    std::uint64_t max_nodes = 0;   // 0 = unlimited
    double max_seconds = 0.0;      // 0 = unlimited
    std::uint32_t target = 0;      // stop at first clique of this size (0 = none)
    std::uint64_t seed = 1;        // warm-start seed
    unsigned threads = 1;
    unsigned greedy_restarts = 64;
    std::uint64_t sls_iterations = 200000;  // plateau-search steps before branching
};

struct CliqueResult {
    std::vector<std::uint32_t> clique;  // pairwise adjacent, re-verified
    std::uint32_t lower = 0;
    std::uint32_t upper = 0;
    bool optimal = false;
    bool interrupted = false;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Branch and bound with greedy-coloring bounds over a degeneracy order.
/// On budget exhaustion the result still carries a valid global upper bound;
/// with a target set, the search stops at the first clique of that size.
CliqueResult max_clique(const ConflictGraph& g, const CliqueBudget& budget = {});

/// Deterministic randomized greedy clique (warm start for the search).
std::vector<std::uint32_t> greedy_clique(const ConflictGraph& g, unsigned restarts, std::uint64_t seed);

/// DIMACS-style export: `p edge n m`, 1-based `e u w` lines, vertex labels in
/// `c label <vertex> <subspace-index>` comments.
void export_graph(const ConflictGraph& g, std::ostream& out);

}  // namespace subcode
