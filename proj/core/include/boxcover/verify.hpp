#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxcover/graph.hpp"
#include "boxcover/interval.hpp"

namespace boxcover {

// One failed clause. dim is -1 for the global meet clauses.
struct Violation {
    int dim = -1;
    std::string clause;  // supergraph | unit-length | interval | unit-interval | unbroken-nonedge
    std::optional<Edge> edge;
    std::optional<int> vertex;
};

struct VerificationReport {
    bool pass = false;
    int dim_count = 0;
    bool meet_matches = false;
    // n <= kRecognitionCap, so the per-dim recognition clause actually ran
    bool recognition_checked = false;
    std::vector<Violation> violations;
    // aligned with source.non_edges(): dims whose intersection graph breaks it
    std::vector<std::vector<int>> nonedge_breakers;
};

// Checks, per dim: supergraph of source, unit lengths when kind = cub, and
// (at recognition scale) that the dim's intersection graph is recognized as
// (unit) interval. Globally: the meet of all dims equals the source, with a
// witness edge for every violated clause.
VerificationReport verify(const Representation& rep);

std::string verification_report_to_json(const VerificationReport& report);

}  // namespace boxcover
