#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxcover/graph.hpp"
#include "boxcover/interval.hpp"

namespace boxcover {

inline constexpr int kRecognitionCap = 16;

struct RecognitionResult {
    bool ok = false;
    std::optional<IntervalAssignment> witness;  // present iff ok
};

// Interval recognition by consecutive arrangement of maximal cliques:
// cliques via branch-and-bound enumeration (reject immediately when more
// than n exist), then DFS over clique orders with consecutivity pruning.
// The witness maps v to [first clique position, last clique position] and
// its intersection graph is exactly g.
RecognitionResult is_interval(const Graph& g, int cap = kRecognitionCap);

// Unit interval = interval with no induced K_{1,3}. The witness solves the
// difference-constraint system of a compatible vertex order with
// Bellman-Ford; it uses denominator 2 when feasible there and falls back
// to a finer denominator otherwise (some unit interval graphs on 7+
// vertices have no half-integer unit representation).
RecognitionResult is_unit_interval(const Graph& g, int cap = kRecognitionCap);

namespace detail {

// Mask-based cores shared with the exact oracle. adj[v] is the neighbor
// bitmask of v; n <= 16. clique_order_out, when non-null and the graph is
// interval, receives the clique masks in a consecutive order.
bool interval_core(int n, const std::uint32_t* adj,
                   std::vector<std::uint32_t>* clique_order_out);
bool claw_free(int n, const std::uint32_t* adj);

}  // namespace detail

}  // namespace boxcover
