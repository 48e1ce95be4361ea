#pragma once

#include <cstddef>

#include "asyncflow/compfn.hpp"
#include "asyncflow/network.hpp"
#include "asyncflow/rational.hpp"
#include "asyncflow/signal.hpp"
#include "asyncflow/state.hpp"

namespace asyncflow {

// hat Phi^alpha(mu, k): mu at k = -1, Phi^{alpha^0 ... alpha^k}(mu) for k >= 0.
State discrete_flow_at(const Network& net, const State& mu, const DiscreteCompFn& alpha, long long k);

// The whole trajectory k -> hat Phi^alpha(mu, k). Progressiveness is not
// required: a non-progressive alpha yields a semi-flow.
DiscreteSignal discrete_flow_signal(const Network& net, const State& mu, const DiscreteCompFn& alpha);

// Phi^rho(mu, t): mu before t_0, hat Phi^alpha(mu, k) on [t_k, t_{k+1}).
State real_flow_at(const Network& net, const State& mu, const RealCompFn& rho, const Rational& t);
RealSignal real_flow_signal(const Network& net, const State& mu, const RealCompFn& rho);

// (Phi o ... o Phi)(mu), k-fold; k = 0 gives mu.
State synchronous_iterate(const Network& net, const State& mu, std::size_t k);

} // namespace asyncflow
