#include "boxcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "boxcover/errors.hpp"

namespace boxcover {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex id " + std::to_string(v) + " out of range (n=" +
                         std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
    Graph g(n);
    for (const auto& [u, v] : pairs) g.add_edge(u, v);
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(v, u)) out.push_back(u);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && m_ == other.m_ && bits_ == other.bits_;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> verts(vertices.begin(), vertices.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.n())
            throw InputError("induced_subgraph: vertex id " + std::to_string(v) +
                             " out of range");
    Graph sub(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]))
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(verts)};
}

BipartitionResult bipartition_of(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    BipartitionResult result;
    Bipartition bip;

    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // odd cycle: paths u->lca and v->lca plus the edge (u,v)
                    std::vector<int> pu, pv;
                    int a = u, b = v;
                    while (depth[a] > depth[b]) { pu.push_back(a); a = parent[a]; }
                    while (depth[b] > depth[a]) { pv.push_back(b); b = parent[b]; }
                    while (a != b) {
                        pu.push_back(a); a = parent[a];
                        pv.push_back(b); b = parent[b];
                    }
                    pu.push_back(a);
                    result.odd_cycle = std::move(pu);
                    for (auto it = pv.rbegin(); it != pv.rend(); ++it)
                        result.odd_cycle.push_back(*it);
                    return result;
                }
            }
        }
    }

    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? bip.side1 : bip.side2).push_back(v);
    result.bipartition = std::move(bip);
    return result;
}

bool is_vertex_cover(const Graph& g, std::span<const int> vertices) {
    std::vector<char> in(g.n(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.n()) return false;
        in[v] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

}  // namespace boxcover
