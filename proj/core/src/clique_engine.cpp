#include "subcode/clique_engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <deque>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace subcode {

namespace {

using Words = std::vector<std::uint64_t>;

unsigned first_bit(const std::uint64_t* w, std::size_t wpr) {
    for (std::size_t i = 0; i < wpr; ++i) {
        if (w[i]) return static_cast<unsigned>(i * 64 + std::countr_zero(w[i]));
    }
    return static_cast<unsigned>(wpr * 64);
}

bool any_bit(const std::uint64_t* w, std::size_t wpr) {
    for (std::size_t i = 0; i < wpr; ++i) {
        if (w[i]) return true;
    }
    return false;
}

unsigned popcount_words(const std::uint64_t* w, std::size_t wpr) {
    unsigned c = 0;
    for (std::size_t i = 0; i < wpr; ++i) c += static_cast<unsigned>(std::popcount(w[i]));
    return c;
}

void clear_bit(std::uint64_t* w, unsigned v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
bool test_bit(const std::uint64_t* w, unsigned v) { return (w[v / 64] >> (v % 64)) & 1u; }
void set_bit(std::uint64_t* w, unsigned v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }

template <typename F>
void for_each_bit(const std::uint64_t* w, std::size_t wpr, F&& f) {
    for (std::size_t i = 0; i < wpr; ++i) {
        std::uint64_t word = w[i];
        while (word) {
            f(static_cast<std::uint32_t>(i * 64 + std::countr_zero(word)));
            word &= word - 1;
        }
    }
}

}  // namespace

ConflictGraph::ConflictGraph(std::uint32_t n) : n_(n), wpr_((n + 63) / 64) {
    adj_.assign(static_cast<std::size_t>(n_) * wpr_, 0);
    labels.assign(n_, 0);
}

std::uint64_t ConflictGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint64_t w : adj_) twice += std::popcount(w);
    return twice / 2;
}

void ConflictGraph::add_edge(std::uint32_t u, std::uint32_t w) {
    if (u == w) throw std::invalid_argument("ConflictGraph: no loops");
    set_bit(adj_.data() + static_cast<std::size_t>(u) * wpr_, w);
    set_bit(adj_.data() + static_cast<std::size_t>(w) * wpr_, u);
}

std::uint32_t ConflictGraph::degree(std::uint32_t u) const {
    return popcount_words(adj_.data() + static_cast<std::size_t>(u) * wpr_, wpr_);
}

ConflictGraph conflict_graph_from_subspaces(const std::vector<Subspace>& subspaces, unsigned min_distance,
                                            unsigned threads) {
    const std::uint32_t n = static_cast<std::uint32_t>(subspaces.size());
    ConflictGraph g(n);
    for (std::uint32_t i = 0; i < n; ++i) g.labels[i] = subspaces[i].index.value_or(0);
    if (n < 2) return g;

    const FieldSpec field = subspaces[0].field();
    const unsigned v = subspaces[0].ambient();
    const bool fast = field.q == 2 && v <= 64;

    // flattened packed basis rows for the q=2 kernel
    std::vector<std::uint64_t> words;
    std::vector<std::uint32_t> offset(n + 1, 0);
    if (fast) {
        for (std::uint32_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + subspaces[i].dim();
        words.resize(offset[n]);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (unsigned r = 0; r < subspaces[i].dim(); ++r) words[offset[i] + r] = subspaces[i].basis.row_word(r);
        }
    }

    const std::size_t wpr = g.words_per_row();
    std::vector<std::uint64_t> upper(static_cast<std::size_t>(n) * wpr, 0);
    auto scan_rows = [&](std::uint32_t begin, std::uint32_t end) {
        for (std::uint32_t i = begin; i < end; ++i) {
            std::uint64_t* row = upper.data() + static_cast<std::size_t>(i) * wpr;
            const unsigned di = subspaces[i].dim();
            for (std::uint32_t j = i + 1; j < n; ++j) {
                const unsigned dj = subspaces[j].dim();
                unsigned rank;
                if (fast) {
                    rank = rank2_words({words.data() + offset[i], di}, {words.data() + offset[j], dj});
                } else {
                    rank = stack_rank(subspaces[i].basis, subspaces[j].basis);
                }
                if (2 * rank - di - dj >= min_distance) set_bit(row, j);
            }
        }
    };

    unsigned nt = std::max(1u, std::min<unsigned>(threads, n));
    if (nt == 1) {
        scan_rows(0, n);
    } else {
        // cut rows so every chunk carries a similar pair count
        std::vector<std::uint32_t> cuts(nt + 1, n);
        cuts[0] = 0;
        const double total = 0.5 * double(n) * double(n - 1);
        std::uint32_t row = 0;
        for (unsigned t = 1; t < nt; ++t) {
            const double want = total * t / nt;
            while (row < n && total - 0.5 * double(n - row) * double(n - row - 1) < want) ++row;
            cuts[t] = row;
        }
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(scan_rows, cuts[t], cuts[t + 1]);
        for (auto& th : pool) th.join();
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t* row = upper.data() + static_cast<std::size_t>(i) * wpr;
        for_each_bit(row, wpr, [&](std::uint32_t j) { g.add_edge(i, j); });
    }
    return g;
}

ConflictGraph build_distance_graph(unsigned q, unsigned v, unsigned k, unsigned d, unsigned threads,
                                   std::uint64_t graph_cap) {
    Grassmannian g(FieldSpec(q), v, k);
    if (g.count() > graph_cap) {
        throw std::invalid_argument("build_distance_graph: " + g.count().get_str() + " vertices exceed the cap " +
                                    std::to_string(graph_cap));
    }
    std::vector<Subspace> all;
    all.reserve(g.count_u64());
    g.for_each([&all](const Subspace& s) { all.push_back(s); });
    return conflict_graph_from_subspaces(all, d, threads);
}

ExtensionGraph build_extension_graph(const SubspaceCode& code, unsigned threads) {
    const VerifyReport rep = verify(code);
    if (code.field().q != 2 || code.ambient() != 7 || rep.size != 17 || !rep.constant_dimension ||
        *rep.dims.begin() != 3 || !rep.min_distance || *rep.min_distance != 6) {
        throw std::invalid_argument("build_extension_graph: code does not verify as (7,17,6;3)_2");
    }
    ExtensionGraph out;
    Grassmannian solids(FieldSpec(2), 7, 4);
    solids.for_each([&](const Subspace& w) {
        for (const Subspace& u : code.codewords()) {
            if (subspace_distance(w, u) < 5) return;
        }
        out.candidates.push_back(w);
    });
    out.graph = conflict_graph_from_subspaces(out.candidates, 6, threads);
    return out;
}

std::vector<std::uint32_t> greedy_clique(const ConflictGraph& g, unsigned restarts, std::uint64_t seed) {
    const std::uint32_t n = g.order();
    if (n == 0) return {};
    const std::size_t wpr = g.words_per_row();
    std::mt19937_64 rng(seed);
    auto bounded = [&rng](std::uint64_t m) { return static_cast<std::uint32_t>(rng() % m); };

    std::vector<std::uint32_t> best;
    Words cand(wpr);
    Words tmp(wpr);
    std::vector<std::uint32_t> ties;
    for (unsigned r = 0; r < std::max(restarts, 1u); ++r) {
        std::uint32_t start = bounded(n);
        std::vector<std::uint32_t> clique{start};
        std::copy(g.row(start).begin(), g.row(start).end(), cand.begin());
        while (any_bit(cand.data(), wpr)) {
            unsigned best_deg = 0;
            ties.clear();
            for_each_bit(cand.data(), wpr, [&](std::uint32_t v) {
                for (std::size_t i = 0; i < wpr; ++i) tmp[i] = cand[i] & g.row(v)[i];
                unsigned deg = popcount_words(tmp.data(), wpr);
                if (ties.empty() || deg > best_deg) {
                    best_deg = deg;
                    ties.assign(1, v);
                } else if (deg == best_deg) {
                    ties.push_back(v);
                }
            });
            std::uint32_t pick = ties[bounded(ties.size())];
            clique.push_back(pick);
            for (std::size_t i = 0; i < wpr; ++i) cand[i] &= g.row(pick)[i];
        }
        if (clique.size() > best.size()) best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

struct SearchShared {
    std::size_t wpr;
    std::uint32_t n;
    const std::vector<std::uint64_t>* adj = nullptr;  // internal-order bitsets
    std::atomic<std::uint32_t> best{0};
    std::vector<std::uint32_t> best_clique;  // internal ids, guarded by best_mutex
    std::mutex best_mutex;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t max_nodes = 0;
    std::uint32_t target = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    const std::uint64_t* row(std::uint32_t v) const { return adj->data() + static_cast<std::size_t>(v) * wpr; }

    void offer(const std::vector<std::uint32_t>& clique) {
        std::uint32_t sz = static_cast<std::uint32_t>(clique.size());
        std::uint32_t cur = best.load();
        while (sz > cur && !best.compare_exchange_weak(cur, sz)) {
        }
        {
            std::lock_guard<std::mutex> lock(best_mutex);
            if (clique.size() > best_clique.size()) best_clique = clique;
        }
        if (target && best.load() >= target) stop.store(true);
    }
};

struct Worker {
    SearchShared& sh;
    std::vector<std::uint32_t> stack;
    std::uint64_t local_nodes = 0;
    std::uint64_t flushed_nodes = 0;

    struct Frame {
        Words p, copy, q;
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> color;
    };
    std::deque<Frame> frames;  // stable references across growth

    explicit Worker(SearchShared& s) : sh(s) {}

    Frame& frame(unsigned depth) {
        while (frames.size() <= depth) {
            Frame f;
            f.p.assign(sh.wpr, 0);
            f.copy.assign(sh.wpr, 0);
            f.q.assign(sh.wpr, 0);
            frames.push_back(std::move(f));
        }
        return frames[depth];
    }

    void flush_nodes() {
        sh.nodes.fetch_add(local_nodes - flushed_nodes, std::memory_order_relaxed);
        flushed_nodes = local_nodes;
    }

    bool should_stop() {
        if (sh.stop.load(std::memory_order_relaxed)) return true;
        if ((local_nodes & 1023) == 0) {
            flush_nodes();
            if (sh.max_nodes && sh.nodes.load(std::memory_order_relaxed) >= sh.max_nodes) {
                sh.stop.store(true);
                return true;
            }
            if (sh.has_deadline && std::chrono::steady_clock::now() >= sh.deadline) {
                sh.stop.store(true);
                return true;
            }
        }
        return false;
    }

    // greedy coloring of f.p; emits (order, color) with colors ascending
    void color_sort(Frame& f) {
        f.order.clear();
        f.color.clear();
        std::copy(f.p.begin(), f.p.end(), f.copy.begin());
        std::uint32_t color = 0;
        while (any_bit(f.copy.data(), sh.wpr)) {
            ++color;
            std::copy(f.copy.begin(), f.copy.end(), f.q.begin());
            while (true) {
                unsigned v = first_bit(f.q.data(), sh.wpr);
                if (v >= sh.n) break;
                f.order.push_back(v);
                f.color.push_back(color);
                clear_bit(f.copy.data(), v);
                clear_bit(f.q.data(), v);
                const std::uint64_t* nv = sh.row(v);
                for (std::size_t i = 0; i < sh.wpr; ++i) f.q[i] &= ~nv[i];
            }
        }
    }

    void expand(unsigned depth) {
        ++local_nodes;
        if (should_stop()) return;
        Frame& f = frame(depth);
        color_sort(f);
        for (std::size_t i = f.order.size(); i-- > 0;) {
            if (sh.stop.load(std::memory_order_relaxed)) return;
            if (stack.size() + f.color[i] <= sh.best.load(std::memory_order_relaxed)) return;
            const std::uint32_t v = f.order[i];
            Frame& nf = frame(depth + 1);
            Frame& cur = frames[depth];  // re-fetch: deque keeps it stable anyway
            const std::uint64_t* nv = sh.row(v);
            bool nonempty = false;
            for (std::size_t w = 0; w < sh.wpr; ++w) {
                nf.p[w] = cur.p[w] & nv[w];
                nonempty = nonempty || nf.p[w];
            }
            stack.push_back(v);
            if (nonempty) {
                expand(depth + 1);
            } else {
                ++local_nodes;
                sh.offer(stack);
            }
            stack.pop_back();
            clear_bit(cur.p.data(), v);
        }
    }
};

/// Phased local search: grow greedily, swap across plateaus, perturb on
/// stagnation. Deterministic for a fixed seed; improves the incumbent before
/// branch and bound starts.
struct PlateauSearch {
    SearchShared& sh;
    std::mt19937_64 rng;
    Words in_c, p, tmp;
    std::vector<std::uint32_t> clique;
    std::vector<std::uint64_t> dropped_at;
    std::uint64_t tenure = 25;

    PlateauSearch(SearchShared& s, std::uint64_t seed)
        : sh(s), rng(seed ^ 0x9e3779b97f4a7c15ull), in_c(s.wpr, 0), p(s.wpr, 0), tmp(s.wpr, 0),
          dropped_at(s.n, 0) {}

    std::uint32_t random_member(const Words& set) {
        unsigned cnt = popcount_words(set.data(), sh.wpr);
        unsigned want = static_cast<unsigned>(rng() % cnt);
        for (std::size_t i = 0; i < sh.wpr; ++i) {
            std::uint64_t word = set[i];
            unsigned here = static_cast<unsigned>(std::popcount(word));
            if (want >= here) {
                want -= here;
                continue;
            }
            while (want--) word &= word - 1;
            return static_cast<std::uint32_t>(i * 64 + std::countr_zero(word));
        }
        return 0;  // unreachable for nonempty sets
    }

    void reset_from(std::uint32_t v) {
        clique.assign(1, v);
        std::fill(in_c.begin(), in_c.end(), 0);
        set_bit(in_c.data(), v);
        const std::uint64_t* nv = sh.row(v);
        std::copy(nv, nv + sh.wpr, p.begin());
    }

    void recompute_p() {
        std::fill(p.begin(), p.end(), ~std::uint64_t{0});
        for (std::uint32_t c : clique) {
            const std::uint64_t* nc = sh.row(c);
            for (std::size_t i = 0; i < sh.wpr; ++i) p[i] &= nc[i];
        }
        // mask stray bits beyond n
        if (sh.n % 64) p[sh.wpr - 1] &= (std::uint64_t{1} << (sh.n % 64)) - 1;
    }

    void add_vertex(std::uint32_t v) {
        clique.push_back(v);
        set_bit(in_c.data(), v);
        const std::uint64_t* nv = sh.row(v);
        for (std::size_t i = 0; i < sh.wpr; ++i) p[i] &= nv[i];
    }

    void drop_vertex(std::uint32_t v, std::uint64_t it) {
        clique.erase(std::find(clique.begin(), clique.end(), v));
        clear_bit(in_c.data(), v);
        dropped_at[v] = it + tenure;
        recompute_p();
    }

    void run(std::uint64_t iterations) {
        if (sh.n == 0 || iterations == 0) return;
        reset_from(static_cast<std::uint32_t>(rng() % sh.n));
        std::uint64_t last_gain = 0;
        std::size_t best_seen = 0;
        for (std::uint64_t it = 0; it < iterations; ++it) {
            if ((it & 4095) == 0) {
                if (sh.stop.load(std::memory_order_relaxed)) return;
                if (sh.has_deadline && std::chrono::steady_clock::now() >= sh.deadline) {
                    sh.stop.store(true);
                    return;
                }
            }
            if (any_bit(p.data(), sh.wpr)) {
                // sample a few candidates, keep the one with most support left
                std::uint32_t pick = random_member(p);
                unsigned pick_deg = 0;
                for (unsigned s = 0; s < 4; ++s) {
                    std::uint32_t v = s == 0 ? pick : random_member(p);
                    const std::uint64_t* nv = sh.row(v);
                    unsigned deg = 0;
                    for (std::size_t i = 0; i < sh.wpr; ++i) deg += static_cast<unsigned>(std::popcount(p[i] & nv[i]));
                    if (s == 0 || deg > pick_deg) {
                        pick = v;
                        pick_deg = deg;
                    }
                }
                add_vertex(pick);
                continue;
            }
            if (clique.size() > best_seen) {
                best_seen = clique.size();
                last_gain = it;
                sh.offer(clique);
                if (sh.stop.load(std::memory_order_relaxed)) return;
            }
            if (it - last_gain > 40000) {
                // stagnation: restart somewhere else
                reset_from(static_cast<std::uint32_t>(rng() % sh.n));
                std::fill(dropped_at.begin(), dropped_at.end(), 0);
                last_gain = it;
                best_seen = 0;
                continue;
            }
            // plateau: vertices adjacent to all but one clique member
            std::uint32_t swap_in = sh.n, swap_out = sh.n;
            unsigned seen = 0;
            for (std::uint32_t u = 0; u < sh.n; ++u) {
                if (test_bit(in_c.data(), u) || dropped_at[u] > it) continue;
                const std::uint64_t* nu = sh.row(u);
                unsigned inside = 0;
                for (std::size_t i = 0; i < sh.wpr; ++i) {
                    inside += static_cast<unsigned>(std::popcount(nu[i] & in_c[i]));
                }
                if (inside + 1 != clique.size()) continue;
                ++seen;
                if (rng() % seen == 0) {
                    swap_in = u;
                    for (std::uint32_t c : clique) {
                        if (!test_bit(nu, c)) {
                            swap_out = c;
                            break;
                        }
                    }
                }
            }
            if (swap_in < sh.n) {
                drop_vertex(swap_out, it);
                add_vertex(swap_in);
            } else {
                // no swap available: shake off a couple of vertices
                unsigned drops = 1 + static_cast<unsigned>(rng() % 2);
                for (unsigned d = 0; d < drops && clique.size() > 1; ++d) {
                    drop_vertex(clique[rng() % clique.size()], it);
                }
            }
        }
    }
};

}  // namespace

CliqueResult max_clique(const ConflictGraph& g, const CliqueBudget& budget) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint32_t n = g.order();
    CliqueResult result;
    if (n == 0) {
        result.optimal = true;
        return result;
    }

    // degeneracy order; internal id 0 = last vertex removed (densest core first)
    std::vector<std::uint32_t> removal;
    removal.reserve(n);
    {
        std::vector<std::uint32_t> deg(n);
        std::vector<bool> gone(n, false);
        for (std::uint32_t v = 0; v < n; ++v) deg[v] = g.degree(v);
        for (std::uint32_t step = 0; step < n; ++step) {
            std::uint32_t pick = n;
            for (std::uint32_t v = 0; v < n; ++v) {
                if (!gone[v] && (pick == n || deg[v] < deg[pick])) pick = v;
            }
            gone[pick] = true;
            removal.push_back(pick);
            for (std::uint32_t w = 0; w < n; ++w) {
                if (!gone[w] && g.edge(pick, w)) --deg[w];
            }
        }
    }
    std::vector<std::uint32_t> internal_of(n), external_of(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t ext = removal[n - 1 - i];
        internal_of[ext] = i;
        external_of[i] = ext;
    }

    const std::size_t wpr = (n + 63) / 64;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * wpr, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint32_t eu = external_of[u];
        for (std::uint32_t w = u + 1; w < n; ++w) {
            if (g.edge(eu, external_of[w])) {
                set_bit(adj.data() + static_cast<std::size_t>(u) * wpr, w);
                set_bit(adj.data() + static_cast<std::size_t>(w) * wpr, u);
            }
        }
    }

    SearchShared sh;
    sh.wpr = wpr;
    sh.n = n;
    sh.adj = &adj;
    sh.max_nodes = budget.max_nodes;
    sh.target = budget.target;
    sh.has_deadline = budget.max_seconds > 0;
    if (sh.has_deadline) {
        sh.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(budget.max_seconds));
    }

    // greedy warm start seeds the incumbent (and may already hit the target)
    {
        std::vector<std::uint32_t> warm = greedy_clique(g, budget.greedy_restarts, budget.seed);
        if (!warm.empty()) {
            std::vector<std::uint32_t> internal_warm;
            internal_warm.reserve(warm.size());
            for (std::uint32_t v : warm) internal_warm.push_back(internal_of[v]);
            sh.offer(internal_warm);
        }
    }

    // root coloring drives both the branch order and the anytime bound
    std::vector<std::uint32_t> root_order, root_color;
    {
        Worker seed_worker(sh);
        Worker::Frame& rf = seed_worker.frame(0);
        for (std::uint32_t v = 0; v < n; ++v) set_bit(rf.p.data(), v);
        seed_worker.color_sort(rf);
        root_order = rf.order;
        root_color = rf.color;
    }

    // plateau search narrows the gap before branching (and often hits the target)
    if (budget.sls_iterations > 0 && !sh.stop.load()) {
        PlateauSearch sls(sh, budget.seed);
        sls.run(budget.sls_iterations);
    }

    const std::size_t m = root_order.size();
    std::vector<std::uint8_t> branch_done(m, 0);
    std::atomic<std::int64_t> next_branch{static_cast<std::int64_t>(m) - 1};
    std::mutex done_mutex;

    auto run_worker = [&] {
        Worker w(sh);
        Words root_p(wpr, 0);
        while (!sh.stop.load()) {
            const std::int64_t i = next_branch.fetch_sub(1);
            if (i < 0) break;
            if (root_color[i] <= sh.best.load()) {
                // colors only shrink below i: everything left is pruned
                std::lock_guard<std::mutex> lock(done_mutex);
                for (std::int64_t j = i; j >= 0; --j) branch_done[j] = 1;
                next_branch.store(-1);
                break;
            }
            const std::uint32_t v = root_order[i];
            std::fill(root_p.begin(), root_p.end(), 0);
            for (std::int64_t j = 0; j < i; ++j) {
                const std::uint32_t u = root_order[j];
                if (test_bit(sh.row(v), u)) set_bit(root_p.data(), u);
            }
            Worker::Frame& f0 = w.frame(0);
            std::copy(root_p.begin(), root_p.end(), f0.p.begin());
            w.stack.assign(1, v);
            if (any_bit(f0.p.data(), wpr)) {
                w.expand(0);
            } else {
                ++w.local_nodes;
                sh.offer(w.stack);
            }
            w.stack.clear();
            if (!sh.stop.load()) {
                std::lock_guard<std::mutex> lock(done_mutex);
                branch_done[i] = 1;
            }
        }
        w.flush_nodes();
    };

    const unsigned nt = std::max(1u, budget.threads);
    if (nt == 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(run_worker);
        for (auto& th : pool) th.join();
    }

    result.lower = sh.best.load();
    bool all_done = true;
    std::uint32_t open_bound = result.lower;
    for (std::size_t i = 0; i < m; ++i) {
        if (!branch_done[i]) {
            all_done = false;
            open_bound = std::max(open_bound, root_color[i]);
        }
    }
    result.upper = all_done ? result.lower : open_bound;
    result.optimal = result.lower == result.upper;
    result.interrupted = sh.stop.load() && !(sh.target && result.lower >= sh.target);
    result.nodes = sh.nodes.load();

    result.clique.reserve(sh.best_clique.size());
    for (std::uint32_t v : sh.best_clique) result.clique.push_back(external_of[v]);
    std::sort(result.clique.begin(), result.clique.end());
    for (std::size_t i = 0; i < result.clique.size(); ++i) {
        for (std::size_t j = i + 1; j < result.clique.size(); ++j) {
            if (!g.edge(result.clique[i], result.clique[j])) {
                throw std::logic_error("max_clique: returned vertex set is not a clique");
            }
        }
    }
    if (result.clique.size() != result.lower) {
        throw std::logic_error("max_clique: witness size does not match the reported lower bound");
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

void export_graph(const ConflictGraph& g, std::ostream& out) {
    out << "c subspace conflict graph\n";
    out << "c vertex labels are Grassmannian enumeration indices\n";
    out << "p edge " << g.order() << " " << g.edge_count() << "\n";
    for (std::uint32_t v = 0; v < g.order(); ++v) {
        out << "c label " << (v + 1) << " " << g.labels[v] << "\n";
    }
    for (std::uint32_t u = 0; u < g.order(); ++u) {
        for (std::uint32_t w = u + 1; w < g.order(); ++w) {
            if (g.edge(u, w)) out << "e " << (u + 1) << " " << (w + 1) << "\n";
        }
    }
}

}  // namespace subcode
