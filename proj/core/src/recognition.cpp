#include "boxcover/recognition.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "boxcover/errors.hpp"

namespace boxcover {

namespace {

using std::uint32_t;

// Bron-Kerbosch with pivoting; false once more than `limit` cliques exist.
bool maximal_cliques(uint32_t r, uint32_t p, uint32_t x, const uint32_t* adj,
                     std::vector<uint32_t>& out, size_t limit) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return out.size() <= limit;
    }
    uint32_t px = p | x;
    int pivot = -1, best = -1;
    for (uint32_t m = px; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        const int score = std::popcount(p & adj[v]);
        if (score > best) { best = score; pivot = v; }
    }
    uint32_t cand = p & ~adj[pivot];
    while (cand) {
        const int v = std::countr_zero(cand);
        const uint32_t bit = uint32_t{1} << v;
        cand &= cand - 1;
        if (!maximal_cliques(r | bit, p & adj[v], x & adj[v], adj, out, limit))
            return false;
        p &= ~bit;
        x |= bit;
    }
    return true;
}

// DFS for an order of the cliques in which each vertex's cliques are
// consecutive. Cliques are tried in ascending mask order, so the first
// order found is deterministic.
bool consecutive_order(const std::vector<uint32_t>& cliques,
                       std::vector<int>& order) {
    const int q = static_cast<int>(cliques.size());
    order.clear();
    std::vector<int> stack;
    stack.reserve(q);

    struct Frame { uint32_t used, started, closed; int next; };
    std::vector<Frame> frames;
    frames.push_back({0, 0, 0, 0});
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (static_cast<int>(stack.size()) == q) {
            order = stack;
            return true;
        }
        bool advanced = false;
        for (int c = f.next; c < q; ++c) {
            if (f.used & (uint32_t{1} << c)) continue;
            if (cliques[c] & f.closed) continue;  // would reopen a vertex
            f.next = c + 1;
            const uint32_t active = f.started & ~f.closed;
            Frame g;
            g.used = f.used | (uint32_t{1} << c);
            g.started = f.started | cliques[c];
            g.closed = f.closed | (active & ~cliques[c]);
            g.next = 0;
            stack.push_back(c);
            frames.push_back(g);
            advanced = true;
            break;
        }
        if (!advanced) {
            frames.pop_back();
            if (!stack.empty()) stack.pop_back();
        }
    }
    return false;
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(static_cast<size_t>(g.n()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= uint32_t{1} << v;
        adj[v] |= uint32_t{1} << u;
    }
    return adj;
}

// Positions of each vertex's first/last clique in the consecutive order.
struct CliqueSpan { std::vector<int> first, last; };

CliqueSpan clique_spans(int n, const std::vector<uint32_t>& ordered) {
    CliqueSpan span{std::vector<int>(n, -1), std::vector<int>(n, -1)};
    for (int pos = 0; pos < static_cast<int>(ordered.size()); ++pos)
        for (uint32_t m = ordered[pos]; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (span.first[v] < 0) span.first[v] = pos;
            span.last[v] = pos;
        }
    return span;
}

// Unit-length feasibility on the grid with denominator `scale`: left
// endpoints x with x_j - x_i in [0, scale] for edges (i before j) and
// >= scale + 1 for non-edges. Bellman-Ford over the difference graph.
bool solve_unit_positions(const Graph& g, const std::vector<int>& order,
                          int scale, std::vector<long long>& x) {
    const int n = g.n();
    struct Arc { int from, to; long long w; };
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int u = order[i], v = order[j];
            if (g.has_edge(u, v)) {
                arcs.push_back({i, j, scale});  // x_j <= x_i + scale
                arcs.push_back({j, i, 0});      // x_i <= x_j
            } else {
                arcs.push_back({j, i, -(scale + 1)});  // x_j >= x_i + scale + 1
            }
        }
    x.assign(static_cast<size_t>(n), 0);
    for (int round = 0; round <= n; ++round) {
        bool changed = false;
        for (const Arc& a : arcs)
            if (x[a.from] + a.w < x[a.to]) {
                x[a.to] = x[a.from] + a.w;
                changed = true;
            }
        if (!changed) return true;
    }
    return false;  // still relaxing after n+1 rounds: negative cycle
}

}  // namespace

namespace detail {

bool interval_core(int n, const uint32_t* adj,
                   std::vector<uint32_t>* clique_order_out) {
    if (n == 0) {
        if (clique_order_out) clique_order_out->clear();
        return true;
    }
    std::vector<uint32_t> cliques;
    const uint32_t all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    if (!maximal_cliques(0, all, 0, adj, cliques, static_cast<size_t>(n)))
        return false;  // more than n maximal cliques: not chordal
    std::sort(cliques.begin(), cliques.end());
    std::vector<int> order;
    if (!consecutive_order(cliques, order)) return false;
    if (clique_order_out) {
        clique_order_out->clear();
        for (int c : order) clique_order_out->push_back(cliques[c]);
    }
    return true;
}

bool claw_free(int n, const uint32_t* adj) {
    for (int v = 0; v < n; ++v) {
        uint32_t nb = adj[v];
        // look for three pairwise non-adjacent neighbors
        for (uint32_t m1 = nb; m1;) {
            const int a = std::countr_zero(m1);
            m1 &= m1 - 1;
            const uint32_t rest1 = nb & ~adj[a] & ~(uint32_t{1} << a);
            for (uint32_t m2 = rest1; m2;) {
                const int b = std::countr_zero(m2);
                m2 &= m2 - 1;
                if (b < a) continue;
                if (rest1 & ~adj[b] & ~((uint32_t{1} << (b + 1)) - 1)) return false;
            }
        }
    }
    return true;
}

}  // namespace detail

RecognitionResult is_interval(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap)
        throw CapacityError("is_interval: n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    const auto adj = adjacency_masks(g);
    std::vector<uint32_t> ordered;
    if (!detail::interval_core(n, adj.data(), &ordered)) return {false, std::nullopt};

    const CliqueSpan span = clique_spans(n, ordered);
    IntervalAssignment witness(n, kDefaultScale);
    for (int v = 0; v < n; ++v)
        witness.set(v, Interval{kDefaultScale * span.first[v],
                                kDefaultScale * span.last[v]});
    return {true, std::move(witness)};
}

RecognitionResult is_unit_interval(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap)
        throw CapacityError("is_unit_interval: n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    const auto adj = adjacency_masks(g);
    std::vector<uint32_t> ordered;
    if (!detail::interval_core(n, adj.data(), &ordered)) return {false, std::nullopt};
    if (!detail::claw_free(n, adj.data())) return {false, std::nullopt};

    // Order by (first clique, last clique, id); for claw-free interval
    // graphs this is a compatible left-endpoint order.
    const CliqueSpan span = clique_spans(n, ordered);
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (span.first[a] != span.first[b]) return span.first[a] < span.first[b];
        if (span.last[a] != span.last[b]) return span.last[a] < span.last[b];
        return a < b;
    });

    std::vector<long long> x;
    int scale = kDefaultScale;
    if (!solve_unit_positions(g, order, scale, x)) {
        scale = 2 * std::max(n, 1);
        if (!solve_unit_positions(g, order, scale, x))
            throw std::logic_error("is_unit_interval: infeasible position system "
                                   "for a claw-free interval graph");
    }
    long long lo = 0;
    for (long long v : x) lo = std::min(lo, v);
    IntervalAssignment witness(n, scale);
    for (int i = 0; i < n; ++i) {
        const long long base = x[i] - lo;
        witness.set(order[i], Interval{static_cast<int>(base),
                                       static_cast<int>(base + scale)});
    }
    if (!(intersection_graph(witness, n) == g))
        throw std::logic_error("is_unit_interval: witness mismatch");
    return {true, std::move(witness)};
}

}  // namespace boxcover
