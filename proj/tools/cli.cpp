#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "asyncflow/analysis.hpp"
#include "asyncflow/compfn.hpp"
#include "asyncflow/errors.hpp"
#include "asyncflow/flow.hpp"
#include "asyncflow/model.hpp"
#include "asyncflow/netparse.hpp"
#include "asyncflow/signal.hpp"
#include "asyncflow/theorems.hpp"

namespace asyncflow::cli {

namespace {

// Raised when the requested check ran and found a counterexample.
struct CheckFailed {};

Network load(const std::string& path)
{
    return compile(load_network_file(path));
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot write '" + path + "'");
    }
    file << text;
}

void require_width(const Network& net, std::size_t width, const std::string& what)
{
    if (width != net.width()) {
        throw DimensionError(what + " has width " + std::to_string(width) + " but the network has n = " +
                             std::to_string(net.width()));
    }
}

struct SimArgs {
    std::string network;
    std::string init;
    std::string alpha;
    long long steps = 10;
    std::string json;
};

void cmd_sim(const SimArgs& a, std::ostream& out, std::ostream& err)
{
    const Network net = load(a.network);
    const State mu = State::parse(a.init);
    const DiscreteCompFn alpha = parse_compfn(a.alpha);
    require_width(net, mu.width(), "--init");
    require_width(net, alpha.width(), "--alpha");
    if (a.steps < 0) {
        throw DomainError("--steps must be >= 0");
    }
    if (!is_progressive_discrete(alpha)) {
        err << "warning: the computation function is not progressive; the trace is a semi-flow\n";
    }
    const DiscreteSignal flow = discrete_flow_signal(net, mu, alpha);
    out << "# k alpha state\n";
    out << "-1 - " << mu.to_string() << '\n';
    for (long long k = 0; k <= a.steps; ++k) {
        out << k << ' ' << alpha.at(static_cast<std::size_t>(k)).to_string() << ' '
            << eval_discrete(flow, k).to_string() << '\n';
    }
    if (!a.json.empty()) {
        write_file(a.json, to_json(flow, a.steps).dump(2) + "\n");
    }
}

struct RsimArgs {
    std::string network;
    std::string init;
    std::string alpha;
    std::string times;
    std::string until = "10";
    std::string json;
};

void cmd_rsim(const RsimArgs& a, std::ostream& out, std::ostream& err)
{
    const Network net = load(a.network);
    const State mu = State::parse(a.init);
    const RealCompFn rho(parse_compfn(a.alpha), parse_time_seq(a.times));
    const Rational until = parse_rational(a.until);
    require_width(net, mu.width(), "--init");
    require_width(net, rho.width(), "--alpha");
    if (!is_progressive_real(rho)) {
        err << "warning: the computation function is not progressive; the trace is a semi-flow\n";
    }
    const RealSignal flow = real_flow_signal(net, mu, rho);
    const auto trace = to_json(flow, until);

    out << "# interval state\n";
    for (const auto& entry : trace) {
        if (!entry.contains("state")) {
            continue;
        }
        const std::string from = entry["from"].is_null() ? "(-inf" : "[" + entry["from"].get<std::string>();
        const std::string to = entry["to"].is_null() ? "inf)" : entry["to"].get<std::string>() + ")";
        out << from << ", " << to << ' ' << entry["state"].get<std::string>() << '\n';
    }
    if (const auto settled = settling(flow)) {
        out << "eventually constant: " << settled->value.to_string();
        if (settled->from) {
            out << " from " << to_string(*settled->from);
        }
        out << '\n';
    } else {
        const auto& marker = trace.back();
        out << "cycle from " << marker["cycle_from"].get<std::string>() << " period "
            << marker["period"].get<std::string>() << ':';
        for (const auto& s : marker["cycle"]) {
            out << ' ' << s.get<std::string>();
        }
        out << '\n';
    }
    if (!a.json.empty()) {
        write_file(a.json, trace.dump(2) + "\n");
    }
}

struct DiagramArgs {
    std::string network;
    std::string dot;
    std::string json;
    bool hide_self_loops = false;
};

void cmd_diagram(const DiagramArgs& a, std::ostream& out)
{
    const StateDiagram diagram = build_diagram(load(a.network));
    const std::string dot = export_dot(diagram, {a.hide_self_loops});
    if (a.dot.empty() || a.dot == "-") {
        out << dot;
    } else {
        write_file(a.dot, dot);
    }
    if (!a.json.empty()) {
        write_file(a.json, to_json(diagram).dump(2) + "\n");
    }
}

void cmd_fixpoints(const std::string& network, std::ostream& out)
{
    for (const auto& s : fixed_points(load(network))) {
        out << s.to_string() << '\n';
    }
}

struct CheckArgs {
    std::string network;
    bool random = false;
    bool exhaustive = false;
    std::size_t trials = 10000;
    std::uint64_t seed = 42;
    unsigned threads = 0;
    std::string mutant = "none";
    std::string json;
};

void cmd_check(const CheckArgs& a, std::ostream& out)
{
    if (a.network.empty() == !a.random) {
        throw DomainError("check needs exactly one of a network file or --random");
    }
    const FlowModel model = FlowModel::mutant(parse_mutation(a.mutant));
    std::optional<Network> fixed;
    if (!a.network.empty()) {
        fixed = load(a.network);
    }
    FuzzConfig config;
    config.seed = a.seed;
    config.trials = a.trials;
    config.threads = a.threads;
    if (fixed) {
        config.n_min = config.n_max = fixed->width();
    }

    const SuiteReport report = run_fuzz_suite(config, model, fixed ? &*fixed : nullptr);
    out << report.to_text();
    nlohmann::json json{{"fuzz", report.to_json()}};
    bool passed = report.passed();
    if (a.exhaustive) {
        const SuiteReport exhaustive = run_exhaustive_small(model);
        out << "\nexhaustive (n <= 2):\n" << exhaustive.to_text();
        json["exhaustive"] = exhaustive.to_json();
        passed = passed && exhaustive.passed();
    }
    json["passed"] = passed;
    if (!a.json.empty()) {
        write_file(a.json, json.dump(2) + "\n");
    }
    if (!passed) {
        throw CheckFailed{};
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Asynchronous Boolean flows: simulation, state diagrams and theorem checks", "asyncflow"};
    app.require_subcommand(1);

    SimArgs sim;
    auto* sim_cmd = app.add_subcommand("sim", "Discrete-time flow trace for k = -1..K");
    sim_cmd->add_option("network", sim.network, "Network file")->required();
    sim_cmd->add_option("--init", sim.init, "Initial state, e.g. 00")->required();
    sim_cmd->add_option("--alpha", sim.alpha, "Computation function, e.g. \"01;(11)\"")->required();
    sim_cmd->add_option("--steps", sim.steps, "Last step K")->capture_default_str();
    sim_cmd->add_option("--json", sim.json, "Write the trace as JSON");

    RsimArgs rsim;
    auto* rsim_cmd = app.add_subcommand("rsim", "Real-time flow as intervals up to time T");
    rsim_cmd->add_option("network", rsim.network, "Network file")->required();
    rsim_cmd->add_option("--init", rsim.init, "Initial state")->required();
    rsim_cmd->add_option("--alpha", rsim.alpha, "Computation function values")->required();
    rsim_cmd->add_option("--times", rsim.times, "Time instants, e.g. \"0,1,3/2;+1/2\"")->required();
    rsim_cmd->add_option("--until", rsim.until, "Last time shown")->capture_default_str();
    rsim_cmd->add_option("--json", rsim.json, "Write the interval trace as JSON");

    DiagramArgs diagram;
    auto* diagram_cmd = app.add_subcommand("diagram", "State diagram as DOT");
    diagram_cmd->add_option("network", diagram.network, "Network file")->required();
    diagram_cmd->add_option("--dot", diagram.dot, "Output path (default: stdout)");
    diagram_cmd->add_option("--json", diagram.json, "Write the diagram as JSON");
    diagram_cmd->add_flag("--hide-self-loops", diagram.hide_self_loops, "Omit edges from a state to itself");

    std::string fix_network;
    auto* fix_cmd = app.add_subcommand("fixpoints", "List the fixed points of Phi");
    fix_cmd->add_option("network", fix_network, "Network file")->required();

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Randomized theorem checks");
    check_cmd->add_option("network", check.network, "Network file (omit with --random)");
    check_cmd->add_flag("--random", check.random, "Use random networks");
    check_cmd->add_option("--trials", check.trials, "Instances per checker")->capture_default_str();
    check_cmd->add_option("--seed", check.seed, "Generator seed")->capture_default_str();
    check_cmd->add_option("--threads", check.threads, "Worker threads (0 = all cores)");
    check_cmd->add_flag("--exhaustive-n2", check.exhaustive, "Also check every network with n <= 2");
    check_cmd->add_option("--json", check.json, "Write the report as JSON");
    check_cmd->add_option("--mutant", check.mutant, "Run against a deliberately broken flow")
        ->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*sim_cmd) {
            cmd_sim(sim, out, err);
        } else if (*rsim_cmd) {
            cmd_rsim(rsim, out, err);
        } else if (*diagram_cmd) {
            cmd_diagram(diagram, out);
        } else if (*fix_cmd) {
            cmd_fixpoints(fix_network, out);
        } else if (*check_cmd) {
            cmd_check(check, out);
        }
    } catch (const CheckFailed&) {
        return exit_check_failed;
    } catch (const std::exception& e) {
        err << "asyncflow: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace asyncflow::cli
