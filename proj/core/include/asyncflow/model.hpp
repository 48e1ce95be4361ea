#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "asyncflow/compfn.hpp"
#include "asyncflow/network.hpp"
#include "asyncflow/signal.hpp"
#include "asyncflow/state.hpp"

namespace asyncflow {

// Deliberate defects used as negative controls for the theorem checkers.
enum class Mutation {
    none,
    phi_at_minus_one,          // hat Phi(mu, -1) = Phi(mu)
    wrong_left_limit,          // real flow takes its first value before t_0
    drop_first_mask,           // alpha^0 is ignored (off by one)
    delayed_switch,            // real flow switches one instant late
    lookahead,                 // state at k already applies alpha^{k+1}
    prefix_counts_as_progress, // progressiveness also counts prefix masks
};

std::string_view to_string(Mutation m);
// Throws DomainError for unknown names.
Mutation parse_mutation(std::string_view name);
std::vector<Mutation> all_mutations();

// The flow implementation under test. The checkers only see flows through
// this bundle, so swapping in a mutant exercises their sensitivity.
struct FlowModel {
    Mutation mutation = Mutation::none;
    std::function<State(const Network&, const State&, const DiscreteCompFn&, long long)> discrete_at;
    std::function<DiscreteSignal(const Network&, const State&, const DiscreteCompFn&)> discrete_signal;
    std::function<RealSignal(const Network&, const State&, const RealCompFn&)> real_signal;
    std::function<bool(const DiscreteCompFn&)> progressive;

    static const FlowModel& reference();
    static FlowModel mutant(Mutation m);
};

} // namespace asyncflow
