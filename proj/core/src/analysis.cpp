#include "asyncflow/analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

void require_diagram_width(const Network& net)
{
    if (net.width() > max_diagram_width) {
        throw CapacityError("state diagrams are limited to n <= " + std::to_string(max_diagram_width) + ", got " +
                            std::to_string(net.width()));
    }
}

std::string join_masks(const std::vector<State>& masks)
{
    std::string out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        out += (i ? "," : "") + masks[i].to_string();
    }
    return out;
}

std::string node_label(const StateDiagram::Node& node)
{
    std::string label = node.state.to_string();
    if (!node.changed_coords.empty()) {
        label += " [Δ";
        for (std::size_t i = 0; i < node.changed_coords.size(); ++i) {
            label += (i ? "," : "") + std::to_string(node.changed_coords[i]);
        }
        label += "]";
    }
    return label;
}

} // namespace

StateDiagram build_diagram(const Network& net)
{
    require_diagram_width(net);
    const std::size_t width = net.width();
    const std::uint32_t count = static_cast<std::uint32_t>(net.state_count());

    StateDiagram diagram;
    diagram.width = width;
    diagram.nodes.reserve(count);
    for (std::uint32_t mu = 0; mu < count; ++mu) {
        StateDiagram::Node node{State(width, mu), {}, {}};
        const std::uint32_t changed = net.image(mu) ^ mu;
        for (std::size_t i = 1; i <= width; ++i) {
            if ((changed >> (i - 1)) & 1u) {
                node.changed_coords.push_back(i);
            }
        }
        // Masks are visited in packed order; sort each label set textually.
        for (std::uint32_t lambda = 0; lambda < count; ++lambda) {
            node.edges[State(width, step_packed(net, lambda, mu))].emplace_back(width, lambda);
        }
        for (auto& [target, masks] : node.edges) {
            std::sort(masks.begin(), masks.end());
        }
        diagram.nodes.push_back(std::move(node));
    }
    return diagram;
}

std::set<State> fixed_points(const Network& net)
{
    std::set<State> out;
    for (std::uint32_t mu = 0; mu < net.state_count(); ++mu) {
        if (net.image(mu) == mu) {
            out.emplace(net.width(), mu);
        }
    }
    return out;
}

std::set<State> reachable(const Network& net, const State& mu)
{
    require_diagram_width(net);
    require_same_width(State(net.width()), mu, "reachable");
    const std::uint32_t count = static_cast<std::uint32_t>(net.state_count());
    std::vector<bool> seen(count, false);
    std::deque<std::uint32_t> queue{mu.packed()};
    seen[mu.packed()] = true;
    while (!queue.empty()) {
        const std::uint32_t current = queue.front();
        queue.pop_front();
        // Masked steps only move coordinates in changed; iterate its subsets.
        const std::uint32_t changed = net.image(current) ^ current;
        for (std::uint32_t sub = changed;; sub = (sub - 1) & changed) {
            const std::uint32_t next = current ^ sub;
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
            if (sub == 0) {
                break;
            }
        }
    }
    std::set<State> out;
    for (std::uint32_t s = 0; s < count; ++s) {
        if (seen[s]) {
            out.emplace(net.width(), s);
        }
    }
    return out;
}

std::string export_dot(const StateDiagram& diagram, const DotOptions& options)
{
    std::vector<const StateDiagram::Node*> order;
    for (const auto& node : diagram.nodes) {
        order.push_back(&node);
    }
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return a->state < b->state; });

    std::ostringstream out;
    out << "digraph state_diagram {\n";
    for (const auto* node : order) {
        out << "  \"" << node->state.to_string() << "\" [label=\"" << node_label(*node) << "\"];\n";
    }
    for (const auto* node : order) {
        for (const auto& [target, masks] : node->edges) {
            if (options.hide_self_loops && target == node->state) {
                continue;
            }
            out << "  \"" << node->state.to_string() << "\" -> \"" << target.to_string() << "\" [label=\""
                << join_masks(masks) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

nlohmann::json to_json(const StateDiagram& diagram)
{
    auto nodes = nlohmann::json::array();
    for (const auto& node : diagram.nodes) {
        auto edges = nlohmann::json::array();
        for (const auto& [target, masks] : node.edges) {
            auto labels = nlohmann::json::array();
            for (const auto& m : masks) {
                labels.push_back(m.to_string());
            }
            edges.push_back({{"to", target.to_string()}, {"masks", std::move(labels)}});
        }
        nodes.push_back({{"state", node.state.to_string()},
                         {"changed_coords", node.changed_coords},
                         {"edges", std::move(edges)}});
    }
    return {{"width", diagram.width}, {"nodes", std::move(nodes)}};
}

} // namespace asyncflow
