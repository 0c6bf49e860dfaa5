#pragma once

#include <span>
#include <string>
#include <vector>

#include "boxcover/graph.hpp"

namespace boxcover {

// Endpoints are stored as integers scaled by the owning assignment's
// denominator: real endpoint = value / scale. The constructions all emit
// scale 2 (half-integer endpoints).
inline constexpr int kDefaultScale = 2;

struct Interval {
    int lo = 0;
    int hi = 0;
};

// Closed interval per vertex, all sharing one denominator. A unit-length
// interval is one with hi - lo == scale (real length exactly 1).
class IntervalAssignment {
public:
    IntervalAssignment() = default;
    explicit IntervalAssignment(int n, int scale = kDefaultScale);

    int size() const { return static_cast<int>(ivals_.size()); }
    int scale() const { return scale_; }

    void set(int v, Interval iv);  // throws InputError on lo > hi or bad id
    const Interval& at(int v) const;

    bool all_unit() const;

private:
    int scale_ = kDefaultScale;
    std::vector<Interval> ivals_;
};

enum class RepKind { box, cub };

// Ordered list of interval supergraph factors attached to a source graph.
// Valid when every dim's intersection graph contains the source and the
// meet over all dims equals it exactly (checked by verify()).
struct Representation {
    RepKind kind = RepKind::box;
    Graph source;
    std::vector<IntervalAssignment> dims;
};

// Edge (u,v) iff the closed intervals of u and v share a point; touching
// endpoints intersect.
Graph intersection_graph(const IntervalAssignment& a, int n);

// Edge iff present in every input; the empty meet is the complete graph.
Graph meet(int n, std::span<const Graph> graphs);

// True iff every edge of g is an edge of h (same vertex count required).
bool is_supergraph(const Graph& h, const Graph& g);

// Canonical single-line JSON:
//   {"kind":"box","scale":2,"n":N,"dims":[{"0":[lo,hi],...},...]}
// Dims with different denominators are normalized to their lcm on write.
std::string representation_to_json(const Representation& rep);
Representation representation_from_json(const std::string& text, const Graph& source);

}  // namespace boxcover
