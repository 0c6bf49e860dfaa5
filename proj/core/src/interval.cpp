#include "boxcover/interval.hpp"

#include <numeric>
#include <string>

#include "boxcover/errors.hpp"
#include "json.hpp"

namespace boxcover {

IntervalAssignment::IntervalAssignment(int n, int scale) : scale_(scale) {
    if (n < 0) throw InputError("interval assignment: negative size");
    if (scale < 1) throw InputError("interval assignment: scale must be positive");
    ivals_.assign(static_cast<size_t>(n), Interval{0, 0});
}

void IntervalAssignment::set(int v, Interval iv) {
    if (v < 0 || v >= size())
        throw InputError("interval assignment: vertex " + std::to_string(v) +
                         " out of range");
    if (iv.lo > iv.hi)
        throw InputError("interval assignment: lo > hi at vertex " + std::to_string(v));
    ivals_[static_cast<size_t>(v)] = iv;
}

const Interval& IntervalAssignment::at(int v) const {
    if (v < 0 || v >= size())
        throw InputError("interval assignment: vertex " + std::to_string(v) +
                         " out of range");
    return ivals_[static_cast<size_t>(v)];
}

bool IntervalAssignment::all_unit() const {
    for (const auto& iv : ivals_)
        if (iv.hi - iv.lo != scale_) return false;
    return true;
}

Graph intersection_graph(const IntervalAssignment& a, int n) {
    if (a.size() != n)
        throw InputError("intersection_graph: assignment covers " +
                         std::to_string(a.size()) + " vertices, expected " +
                         std::to_string(n));
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Interval& iu = a.at(u);
            const Interval& iv = a.at(v);
            if (iu.lo <= iv.hi && iv.lo <= iu.hi) g.add_edge(u, v);
        }
    return g;
}

Graph meet(int n, std::span<const Graph> graphs) {
    for (const Graph& g : graphs)
        if (g.n() != n)
            throw InputError("meet: graph on " + std::to_string(g.n()) +
                             " vertices, expected " + std::to_string(n));
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool everywhere = true;
            for (const Graph& g : graphs)
                if (!g.has_edge(u, v)) { everywhere = false; break; }
            if (everywhere) out.add_edge(u, v);
        }
    return out;
}

bool is_supergraph(const Graph& h, const Graph& g) {
    if (h.n() != g.n())
        throw InputError("is_supergraph: vertex counts differ");
    for (const auto& [u, v] : g.edges())
        if (!h.has_edge(u, v)) return false;
    return true;
}

std::string representation_to_json(const Representation& rep) {
    using json = nlohmann::ordered_json;
    int scale = 1;
    for (const auto& dim : rep.dims) scale = std::lcm(scale, dim.scale());
    if (rep.dims.empty()) scale = kDefaultScale;

    json j;
    j["kind"] = rep.kind == RepKind::box ? "box" : "cub";
    j["scale"] = scale;
    j["n"] = rep.source.n();
    j["dims"] = json::array();
    for (const auto& dim : rep.dims) {
        const int factor = scale / dim.scale();
        json d = json::object();
        for (int v = 0; v < dim.size(); ++v) {
            const Interval& iv = dim.at(v);
            d[std::to_string(v)] = {iv.lo * factor, iv.hi * factor};
        }
        j["dims"].push_back(std::move(d));
    }
    return j.dump();
}

Representation representation_from_json(const std::string& text, const Graph& source) {
    using json = nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("representation: bad JSON: ") + e.what());
    }
    Representation rep;
    rep.source = source;
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "box") rep.kind = RepKind::box;
        else if (kind == "cub") rep.kind = RepKind::cub;
        else throw InputError("representation: kind must be \"box\" or \"cub\"");
        const int scale = j.at("scale").get<int>();
        if (scale < 1) throw InputError("representation: scale must be positive");
        const int n = j.at("n").get<int>();
        if (n != source.n())
            throw InputError("representation: n=" + std::to_string(n) +
                             " does not match graph n=" + std::to_string(source.n()));
        for (const auto& d : j.at("dims")) {
            IntervalAssignment dim(n, scale);
            for (int v = 0; v < n; ++v) {
                const std::string key = std::to_string(v);
                if (!d.contains(key))
                    throw InputError("representation: dim missing vertex " + key);
                const auto& pair = d.at(key);
                if (!pair.is_array() || pair.size() != 2)
                    throw InputError("representation: interval of vertex " + key +
                                     " must be [lo,hi]");
                dim.set(v, Interval{pair[0].get<int>(), pair[1].get<int>()});
            }
            rep.dims.push_back(std::move(dim));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("representation: ") + e.what());
    }
    return rep;
}

}  // namespace boxcover
