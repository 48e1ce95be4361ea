#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "asyncflow/compfn.hpp"
#include "asyncflow/model.hpp"
#include "asyncflow/network.hpp"
#include "asyncflow/rational.hpp"
#include "asyncflow/state.hpp"

namespace asyncflow {

// A failing instance, serialized field by field in the CLI text formats so
// that it can be replayed with `asyncflow sim` / `asyncflow rsim`.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
    std::string to_text() const;
    nlohmann::json to_json() const;
};

struct CheckResult {
    bool passed = true;
    std::size_t trials = 0;
    std::optional<Counterexample> counterexample;

    static CheckResult pass(std::size_t trials = 1) { return {true, trials, std::nullopt}; }
    static CheckResult fail(Counterexample c) { return {false, 1, std::move(c)}; }
};

// hat Phi^alpha(mu, -1) == mu.
CheckResult check_consistency_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                       const FlowModel& model = FlowModel::reference());
// Phi^rho(mu, t_0 - 0) == mu.
CheckResult check_consistency_real(const Network& net, const State& mu, const RealCompFn& rho,
                                   const FlowModel& model = FlowModel::reference());

// Shifting the flow by kp equals flowing the shifted schedule from the state
// at kp - 1, for every k in [-1, k_max]. alpha must be progressive.
CheckResult check_composition_shift_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                             std::size_t kp, long long k_max,
                                             const FlowModel& model = FlowModel::reference());
// Real-time counterpart, compared as signals on the canonical probe set.
// rho must be progressive.
CheckResult check_composition_shift_real(const Network& net, const State& mu, const RealCompFn& rho,
                                         const Rational& tp, const FlowModel& model = FlowModel::reference());

// Restarting from the state at kp with alpha shifted by kp + 1 reproduces
// the flow for every k in [kp, k_max]; kp >= -1.
CheckResult check_composition_restart_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                               long long kp, long long k_max,
                                               const FlowModel& model = FlowModel::reference());
// Restarting from Phi^rho(mu, tp) under rho restricted to (tp, inf)
// reproduces the flow at every probe t >= tp.
CheckResult check_composition_restart_real(const Network& net, const State& mu, const RealCompFn& rho,
                                           const Rational& tp, const FlowModel& model = FlowModel::reference());

// alpha and beta must agree on indices 0..k; the flows then agree at k.
CheckResult check_causality_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                     const DiscreteCompFn& beta, std::size_t k,
                                     const FlowModel& model = FlowModel::reference());
// rho and rho2 must agree on (-inf, tp]; the flows then agree at tp.
CheckResult check_causality_real(const Network& net, const State& mu, const RealCompFn& rho, const RealCompFn& rho2,
                                 const Rational& tp, const FlowModel& model = FlowModel::reference());

// progressive(alpha) <=> progressive(shift(alpha, kp)).
CheckResult check_progressiveness_shift(const DiscreteCompFn& alpha, std::size_t kp,
                                        const FlowModel& model = FlowModel::reference());
CheckResult check_progressiveness_shift(const RealCompFn& rho, const Rational& tp,
                                        const FlowModel& model = FlowModel::reference());

struct FuzzConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 10000;
    std::size_t n_min = 1;
    std::size_t n_max = 6;
    std::size_t max_prefix = 4;
    std::size_t max_period = 4;
    std::size_t max_explicit_times = 4;
    long long k_max = 50;
    // 0 = hardware concurrency. The report does not depend on this.
    unsigned threads = 0;

    // Throws DomainError on an invalid configuration.
    void validate() const;
};

struct TheoremReport {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::optional<Counterexample> first_counterexample;

    bool passed() const noexcept { return failures == 0; }
};

struct SuiteReport {
    std::vector<TheoremReport> theorems;

    bool passed() const noexcept;
    const TheoremReport* find(std::string_view name) const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

// Names of the checkers in report order.
const std::vector<std::string>& checker_names();

// Runs every checker on `config.trials` seeded random instances each. With
// `fixed` set, every instance uses that network instead of a random one.
SuiteReport run_fuzz_suite(const FuzzConfig& config, const FlowModel& model = FlowModel::reference(),
                           const Network* fixed = nullptr);

// The fixed battery of 20 progressive schedules used by the exhaustive mode.
std::vector<DiscreteCompFn> schedule_battery(std::size_t width);

// Every network with n <= 2, every initial state, every battery schedule,
// through every discrete-time checker.
SuiteReport run_exhaustive_small(const FlowModel& model = FlowModel::reference(), long long k_max = 50);

} // namespace asyncflow
