#pragma once

#include "pivar/polynomial.hpp"

#include <string>
#include <vector>

namespace pivar {

struct GraphNode {
    int degree = 0;
    std::string name;
    Polynomial generator;
    // Irreducible module generated, e.g. "(2,1,1)".
    std::string module;
};

// The target is a new consequence of the source.
struct GraphEdge {
    int from = 0;
    int to = 0;
    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// The target does not follow from the source; certificate names the witness
// algebra or "span".
struct NonEdge {
    int from = 0;
    int to = 0;
    std::string certificate;
};

struct ImplicationGraph {
    std::string name;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<NonEdge> non_edges;
};

} // namespace pivar
