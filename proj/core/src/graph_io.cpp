#include "boxcover/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "boxcover/errors.hpp"

namespace boxcover {

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw InputError("edge list: expected header \"n m\"");
    if (n < 0 || m < 0) throw InputError("edge list: negative counts in header");
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw InputError("edge list: expected " + std::to_string(m) +
                             " edges, stream ended at " + std::to_string(i));
        pairs.push_back(make_edge(u, v));
    }
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_bits(std::string& out, std::vector<bool>& bits) {
    while (bits.size() % 6 != 0) bits.push_back(false);
    for (size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = (value << 1) | (bits[i + b] ? 1 : 0);
        out.push_back(static_cast<char>(value + 63));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= 68719476735LL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw InputError("graph6: n too large");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
        line.remove_prefix(kGraph6Header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw InputError("graph6: empty input");

    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw InputError("graph6: truncated input");
        const int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw InputError("graph6: invalid byte");
        return c - 63;
    };

    long long n = 0;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {  // c0 == 63, i.e. '~'
        int c1 = next();
        if (c1 < 63) {
            n = c1;
            n = (n << 6) | next();
            n = (n << 6) | next();
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        }
    }
    if (n > 1000000) throw InputError("graph6: n too large");

    const long long nbits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() - pos != need)
        throw InputError("graph6: wrong payload length for n=" + std::to_string(n));

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int u = 0, v = 1;
    for (size_t i = pos; i < line.size(); ++i) {
        const int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw InputError("graph6: invalid byte");
        const int value = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (value >> b) & 1;
            if (bit < nbits) {
                if (set) g.add_edge(u, v);
                if (++u == v) { u = 0; ++v; }
            } else if (set) {
                throw InputError("graph6: nonzero padding bits");
            }
        }
    }
    return g;
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    if (path.extension() == ".g6") {
        std::string line;
        if (!std::getline(in, line)) throw InputError("empty graph6 file " + path.string());
        return from_graph6(line);
    }
    return read_edge_list(in);
}

void write_graph_file(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path.string() + " for writing");
    if (path.extension() == ".g6")
        out << to_graph6(g) << '\n';
    else
        write_edge_list(g, out);
    if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace boxcover
