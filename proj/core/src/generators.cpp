#include "boxcover/generators.hpp"

#include <random>
#include <string>

#include "boxcover/errors.hpp"

namespace boxcover {

namespace {

Bipartition parity_sides(int n) {
    Bipartition bip;
    for (int v = 0; v < n; ++v) (v % 2 == 0 ? bip.side1 : bip.side2).push_back(v);
    return bip;
}

Bipartition range_sides(int cut, int n) {
    Bipartition bip;
    for (int v = 0; v < n; ++v) (v < cut ? bip.side1 : bip.side2).push_back(v);
    return bip;
}

}  // namespace

Generated generate(Family family, const GenParams& params) {
    const int n = params.n;
    if (n < 0) throw InputError("generate: n must be nonnegative");
    Generated out{Graph(n), std::nullopt};
    Graph& g = out.graph;

    switch (family) {
        case Family::path:
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            out.bipartition = parity_sides(n);
            break;
        case Family::cycle:
            if (n < 3) throw InputError("cycle: n must be at least 3");
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            if (n % 2 == 0) out.bipartition = parity_sides(n);
            break;
        case Family::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            break;
        case Family::star:
            if (n < 1) throw InputError("star: n must be at least 1");
            for (int v = 1; v < n; ++v) g.add_edge(0, v);
            out.bipartition = range_sides(1, n);
            break;
        case Family::complete_bipartite: {
            const int cut = n / 2;
            for (int u = 0; u < cut; ++u)
                for (int v = cut; v < n; ++v) g.add_edge(u, v);
            out.bipartition = range_sides(cut, n);
            break;
        }
        case Family::roberts:
            if (n < 2 || n % 2 != 0) throw InputError("roberts: n must be even and >= 2");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!(u / 2 == v / 2)) g.add_edge(u, v);
            break;
        case Family::crown: {
            if (n < 4 || n % 2 != 0) throw InputError("crown: n must be even and >= 4");
            const int half = n / 2;
            for (int u = 0; u < half; ++u)
                for (int v = half; v < n; ++v)
                    if (v - half != u) g.add_edge(u, v);
            out.bipartition = range_sides(half, n);
            break;
        }
        case Family::random_gnp: {
            if (params.p < 0.0 || params.p > 1.0)
                throw InputError("random: p must be in [0,1]");
            std::mt19937_64 rng(params.seed);
            // one draw per pair in lex order; stable across platforms
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const double x =
                        static_cast<double>(rng() >> 11) * 0x1.0p-53;
                    if (x < params.p) g.add_edge(u, v);
                }
            break;
        }
    }
    return out;
}

std::optional<Family> family_from_string(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "roberts") return Family::roberts;
    if (name == "crown") return Family::crown;
    if (name == "random") return Family::random_gnp;
    return std::nullopt;
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::roberts: return "roberts";
        case Family::crown: return "crown";
        case Family::random_gnp: return "random";
    }
    return "unknown";
}

}  // namespace boxcover
