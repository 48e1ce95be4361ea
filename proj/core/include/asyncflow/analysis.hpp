#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asyncflow/network.hpp"
#include "asyncflow/state.hpp"

namespace asyncflow {

// All one-step asynchronous transitions mu -> Phi^lambda(mu) over B^n.
struct StateDiagram {
    struct Node {
        State state;
        // Coordinates i with Phi_i(mu) != mu_i, ascending, 1-based.
        std::vector<std::size_t> changed_coords;
        // Target -> masks leading there. The mask sets partition B^n.
        std::map<State, std::vector<State>> edges;
    };

    std::size_t width = 0;
    // Indexed by the packed state.
    std::vector<Node> nodes;
};

inline constexpr std::size_t max_diagram_width = 16;

// CapacityError when net.width() > max_diagram_width.
StateDiagram build_diagram(const Network& net);

std::set<State> fixed_points(const Network& net);

// Least set containing mu closed under every masked step.
std::set<State> reachable(const Network& net, const State& mu);

struct DotOptions {
    bool hide_self_loops = false;
};

// Deterministic DOT digraph. Nodes read "01 [Δ2]" when coordinate 2 changes
// under Phi; parallel masks share one edge label.
std::string export_dot(const StateDiagram& diagram, const DotOptions& options = {});
nlohmann::json to_json(const StateDiagram& diagram);

} // namespace asyncflow
