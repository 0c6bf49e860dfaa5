#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "boxcover/graph.hpp"

namespace boxcover {

enum class Family {
    path,
    cycle,
    complete,
    star,                // center is vertex 0
    complete_bipartite,  // sides {0..floor(n/2)-1} and the rest
    roberts,             // K_n minus the matching {(2i, 2i+1)}, n even
    crown,               // K_{n/2,n/2} minus the matching {(i, i+n/2)}, n even >= 4
    random_gnp,          // G(n,p), seeded and reproducible
};

struct GenParams {
    int n = 0;
    double p = 0.5;           // random_gnp only
    std::uint64_t seed = 1;   // random_gnp only
};

struct Generated {
    Graph graph;
    std::optional<Bipartition> bipartition;  // set for the bipartite families
};

Generated generate(Family family, const GenParams& params);

std::optional<Family> family_from_string(std::string_view name);
std::string_view family_name(Family family);

}  // namespace boxcover
