// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "asyncflow/analysis.hpp"
#include "asyncflow/errors.hpp"
#include "asyncflow/flow.hpp"
#include "asyncflow/generate.hpp"
#include "asyncflow/netparse.hpp"
#include "asyncflow/signal.hpp"
#include "asyncflow/theorems.hpp"
#include "expr_gen.hpp"
#include "oracles.hpp"

using namespace asyncflow;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && passed) {
            passed = false;
            detail = what;
        }
    }
};

State S(const char* bits)
{
    return State::parse(bits);
}

bool same_tables(const Network& a, const Network& b)
{
    return a.width() == b.width() && std::ranges::equal(a.images(), b.images());
}

Outcome golden_scenarios()
{
    Outcome o;
    const Network phi = example_circuit();
    const TimeSeq unit = TimeSeq::arithmetic(0, 1);
    const auto first_step = [&](const char* lambda) {
        return discrete_flow_at(phi, S("00"), DiscreteCompFn({S(lambda)}, {S("11")}), 0);
    };
    o.require(first_step("00") == S("00"), "00 under 00");
    o.require(first_step("10") == S("10"), "00 under 10");
    o.require(first_step("01") == S("01"), "00 under 01");
    o.require(first_step("11") == S("11"), "00 under 11");

    const RealSignal idle = real_flow_signal(phi, S("00"), RealCompFn(DiscreteCompFn::constant(S("00")), unit));
    o.require(eventually_constant(idle) == S("00"), "00 stays under 0^n");

    // Once at 01 the state never leaves, whatever is scheduled afterwards.
    const RealCompFn stable(DiscreteCompFn({S("01")}, {S("11"), S("10"), S("01")}), unit);
    const RealSignal settled = real_flow_signal(phi, S("00"), stable);
    const auto s = settling(settled);
    o.require(s && s->value == S("01") && s->from == Rational(0), "01 reached at 0 and kept");

    const RealSignal cycling = real_flow_signal(phi, S("10"), RealCompFn(DiscreteCompFn::constant(S("01")), unit));
    o.require(!eventually_constant(cycling), "10 under 01 forever is not eventually constant");
    for (int k = 0; k < 20; ++k) {
        o.require(eval_real(cycling, Rational(k)) == (k % 2 == 0 ? S("11") : S("10")), "10 <-> 11 alternation");
    }
    return o;
}

// Mutant -> checker it must trip. Together they cover every checker.
const std::vector<std::pair<Mutation, std::string>> negative_controls{
    {Mutation::prefix_counts_as_progress, "progressive_shift.discrete"},
    {Mutation::prefix_counts_as_progress, "progressive_shift.real"},
    {Mutation::phi_at_minus_one, "consistency.discrete"},
    {Mutation::wrong_left_limit, "consistency.real"},
    {Mutation::drop_first_mask, "composition_shift.discrete"},
    {Mutation::drop_first_mask, "composition_shift.real"},
    {Mutation::drop_first_mask, "composition_restart.discrete"},
    {Mutation::drop_first_mask, "composition_restart.real"},
    {Mutation::lookahead, "causality.discrete"},
    {Mutation::lookahead, "causality.real"},
};

Outcome theorem_fuzz(double& seconds)
{
    Outcome o;
    FuzzConfig config;
    config.seed = 42;
    config.trials = 10000;
    config.n_min = 1;
    config.n_max = 6;
    config.k_max = 50;
    const auto start = Clock::now();
    const SuiteReport report = run_fuzz_suite(config);
    seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (const auto& t : report.theorems) {
        o.require(t.passed() && t.trials == config.trials, t.name + " failed on the reference flow");
    }
    o.require(report.theorems.size() == checker_names().size(), "missing checkers");

    config.trials = 2000;
    for (const auto mutation : all_mutations()) {
        if (mutation == Mutation::none) {
            continue;
        }
        const SuiteReport mutant = run_fuzz_suite(config, FlowModel::mutant(mutation));
        o.require(!mutant.passed(), std::string(to_string(mutation)) + " went undetected");
        for (const auto& [m, name] : negative_controls) {
            if (m == mutation) {
                const auto* t = mutant.find(name);
                o.require(t && !t->passed(), name + " missed " + std::string(to_string(m)));
            }
        }
    }
    return o;
}

Outcome exhaustive(double& seconds)
{
    Outcome o;
    const auto start = Clock::now();
    const SuiteReport report = run_exhaustive_small();
    seconds = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(report.passed(), "exhaustive suite failed");
    // n = 1: 4 networks x 2 states, n = 2: 256 networks x 4 states; 20 schedules each.
    const std::size_t instances = (4 * 2 + 256 * 4) * 20;
    for (const auto& t : report.theorems) {
        o.require(t.trials >= instances, t.name + " ran fewer instances than expected");
    }
    o.require(!run_exhaustive_small(FlowModel::mutant(Mutation::lookahead)).passed(), "lookahead undetected");
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        Rng rng = derive_rng(4, 0, trial);
        const std::size_t n = random_index(rng, 1, 8);
        const Network net = random_network(rng, n);
        const State mu = random_state(rng, n);
        const DiscreteCompFn alpha = random_compfn(rng, n, {});
        const DiscreteSignal signal = discrete_flow_signal(net, mu, alpha);
        State folded = mu;
        o.require(eval_discrete(signal, -1) == mu, "k = -1");
        for (long long k = 0; k <= 200; ++k) {
            folded = oracle::masked_step(net, alpha.at(static_cast<std::size_t>(k)), folded);
            o.require(eval_discrete(signal, k) == folded, "trial " + std::to_string(trial) + " k " + std::to_string(k));
        }
    }
    return o;
}

Outcome synchronous_specialization()
{
    Outcome o;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        Rng rng = derive_rng(5, 0, trial);
        const std::size_t n = random_index(rng, 1, 8);
        const Network net = random_network(rng, n);
        const State mu = random_state(rng, n);
        const DiscreteSignal signal = discrete_flow_signal(net, mu, DiscreteCompFn::constant(State::ones(n)));
        State iterated = mu;
        for (long long k = 0; k <= 50; ++k) {
            // The flow at step k - 1 has applied k synchronous rounds.
            o.require(eval_discrete(signal, k - 1) == iterated, "trial " + std::to_string(trial));
            o.require(synchronous_iterate(net, mu, static_cast<std::size_t>(k)) == iterated, "synchronous_iterate");
            iterated = apply_full(net, iterated);
        }
    }
    return o;
}

Outcome signal_laws()
{
    Outcome o;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        Rng rng = derive_rng(6, 0, trial);
        const std::size_t n = random_index(rng, 1, 4);
        const RealSignal x(random_state(rng, n), random_time_seq(rng, {}), random_compfn(rng, n, {}).masks());
        const auto probes = canonical_probes(x);
        for (std::size_t i = 0; i + 1 < probes.size(); ++i) {
            const Rational& t = probes[i];
            const Rational& next = probes[i + 1];
            if (x.times().index_of(t)) {
                // Probes alternate instant, midpoint, instant, ...
                o.require(eval_real(x, t) == eval_real(x, next), "right-continuity");
                o.require(left_limit(x, t) == eval_real(x, probes[i - 1]), "left-limit law");
            } else {
                o.require(left_limit(x, t) == eval_real(x, t), "left limit off the switch instants");
            }
        }
        o.require(left_limit(x, x.times().at(0)) == x.initial(), "left limit at t_0");

        Rational a = random_rational(rng, -3, 12);
        Rational b = random_rational(rng, -3, 12);
        if (b < a) {
            std::swap(a, b);
        }
        o.require(signals_equal(shift_signal_real(x, x.times().at(0) - 1), x), "shift before t_0 is the identity");
        o.require(signals_equal(shift_signal_real(shift_signal_real(x, a), b), shift_signal_real(x, b)),
                  "shift composition");
        const RealSignal y = shift_signal_real(x, a);
        for (const auto& t : canonical_probes(x, y)) {
            o.require(eval_real(y, t) == (t >= a ? eval_real(x, t) : left_limit(x, a)), "shift definition");
        }

        const DiscreteSignal d(random_state(rng, n), random_compfn(rng, n, {}).masks());
        const std::size_t p = random_index(rng, 0, 8);
        const std::size_t q = random_index(rng, 0, 8);
        const auto twice = shift_signal_discrete(shift_signal_discrete(d, p), q);
        const auto once = shift_signal_discrete(d, p + q);
        for (long long k = -1; k <= 30; ++k) {
            o.require(eval_discrete(twice, k) == eval_discrete(once, k), "discrete shift composition");
        }
    }
    return o;
}

Outcome parser()
{
    Outcome o;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        Rng rng = derive_rng(7, 0, trial);
        const std::size_t n = random_index(rng, 1, 6);
        const NetworkFile file = testing::random_network_file(rng, n, 5);
        const NetworkFile reparsed = parse_network(print_network(file));
        o.require(same_tables(compile(reparsed), compile(file)), "round trip " + std::to_string(trial));
    }
    const std::string alphabet = "x0123456789n=!&^|() \t\n#\r";
    std::size_t diagnosed = 0;
    for (std::uint64_t trial = 0; trial < 10000; ++trial) {
        Rng rng = derive_rng(7, 1, trial);
        std::string text(random_index(rng, 0, 64), ' ');
        for (auto& c : text) {
            c = trial % 2 ? static_cast<char>(random_index(rng, 0, 255))
                          : alphabet[random_index(rng, 0, alphabet.size() - 1)];
        }
        try {
            const NetworkFile file = parse_network(text);
            if (file.width <= 10) {
                compile(file);
            }
        } catch (const ParseError&) {
            ++diagnosed;
        } catch (const CapacityError&) {
        }
    }
    o.require(diagnosed > 0, "fuzz produced no diagnostics");

    const Network loaded = compile(load_network_file(ASYNCFLOW_TEST_DATA "/example_circuit.net"));
    o.require(apply_full(loaded, S("00")) == S("11"), "00 -> 11");
    o.require(apply_full(loaded, S("01")) == S("01"), "01 -> 01");
    o.require(apply_full(loaded, S("10")) == S("11"), "10 -> 11");
    o.require(apply_full(loaded, S("11")) == S("10"), "11 -> 10");
    return o;
}

Outcome diagram_coherence()
{
    Outcome o;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        Rng rng = derive_rng(8, 0, trial);
        const std::size_t n = random_index(rng, 1, 3);
        const Network net = random_network(rng, n);
        const StateDiagram diagram = build_diagram(net);
        for (const auto& node : diagram.nodes) {
            std::set<State> masks;
            for (const auto& [target, lambdas] : node.edges) {
                for (const auto& lambda : lambdas) {
                    o.require(masks.insert(lambda).second, "mask listed twice");
                    o.require(discrete_flow_at(net, node.state, DiscreteCompFn::constant(lambda), 0) == target,
                              "edge disagrees with the flow");
                }
            }
            o.require(masks.size() == (std::size_t{1} << n), "masks do not cover B^n");
        }
    }
    o.require(fixed_points(example_circuit()) == std::set<State>{S("01")}, "fixed points of the example");
    return o;
}

} // namespace

int main()
{
    int failures = 0;
    const auto report = [&](int id, const std::string& name, const std::function<Outcome()>& body,
                            double limit_seconds = 0, const double* measured = nullptr) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        const double timed = measured ? *measured : elapsed;
        if (limit_seconds > 0 && timed > limit_seconds) {
            o.require(false, "took " + std::to_string(timed) + " s, limit " + std::to_string(limit_seconds) + " s");
        }
        char line[64];
        std::snprintf(line, sizeof line, "%.2fs", elapsed);
        std::cout << "criterion " << id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << name << " (" << line << ")";
        if (!o.passed) {
            std::cout << "  " << o.detail;
            ++failures;
        }
        std::cout << std::endl;
    };

    double fuzz_seconds = 0;
    double exhaustive_seconds = 0;
    report(1, "golden scenarios on the example circuit", golden_scenarios, 1.0);
    report(2, "theorem fuzz suite, 10^4 trials per checker, with negative controls",
           [&] { return theorem_fuzz(fuzz_seconds); }, 60.0, &fuzz_seconds);
    report(3, "exhaustive n <= 2 networks x schedule battery", [&] { return exhaustive(exhaustive_seconds); }, 30.0,
           &exhaustive_seconds);
    report(4, "cycle-detected flow equals the naive fold, k <= 200", oracle_equivalence);
    report(5, "all-ones schedule equals synchronous iteration, k <= 50", synchronous_specialization);
    report(6, "signal laws at canonical probes", signal_laws);
    report(7, "parser round trip, byte fuzz, example file", parser);
    report(8, "diagram mask partition and flow coherence", diagram_coherence);

    std::cout << (failures == 0 ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
