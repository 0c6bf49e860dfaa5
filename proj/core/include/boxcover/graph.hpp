#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace boxcover {

// Unordered vertex pair, normalized to first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1, no self-loops. Value type;
// algorithms treat it as immutable once built, so sharing across threads
// needs no synchronization.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Duplicates collapse; self-loops and out-of-range ids throw InputError.
    static Graph from_edge_list(int n, std::span<const Edge> pairs);

    int n() const { return n_; }
    int m() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;  // ascending
    std::vector<Edge> edges() const;          // lex ascending
    std::vector<Edge> non_edges() const;      // lex ascending

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;                     // 64-bit blocks per adjacency row
    std::vector<std::uint64_t> bits_;   // n_ rows of words_ blocks
};

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // dense new id -> original id, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

struct Bipartition {
    std::vector<int> side1, side2;  // ascending
};

// BFS 2-coloring, one component at a time; the lowest-index vertex of each
// component lands in side1. On failure odd_cycle holds the vertices of an
// odd cycle in order.
struct BipartitionResult {
    std::optional<Bipartition> bipartition;
    std::vector<int> odd_cycle;
    bool ok() const { return bipartition.has_value(); }
};
BipartitionResult bipartition_of(const Graph& g);

// True iff every edge of g has an endpoint in the set.
bool is_vertex_cover(const Graph& g, std::span<const int> vertices);

}  // namespace boxcover
