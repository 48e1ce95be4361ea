#include "asyncflow/flow.hpp"

#include <unordered_map>

#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

void require_widths(const Network& net, const State& mu, std::size_t schedule_width, std::string_view context)
{
    if (mu.width() != net.width() || schedule_width != net.width()) {
        throw DimensionError(std::string(context) + ": network width " + std::to_string(net.width()) +
                             ", state width " + std::to_string(mu.width()) + ", schedule width " +
                             std::to_string(schedule_width));
    }
}

} // namespace

State discrete_flow_at(const Network& net, const State& mu, const DiscreteCompFn& alpha, long long k)
{
    require_widths(net, mu, alpha.width(), "discrete_flow_at");
    if (k < -1) {
        throw DomainError("discrete time starts at -1, got " + std::to_string(k));
    }
    std::uint32_t current = mu.packed();
    for (long long j = 0; j <= k; ++j) {
        current = step_packed(net, alpha.at(static_cast<std::size_t>(j)).packed(), current);
    }
    return State(net.width(), current);
}

DiscreteSignal discrete_flow_signal(const Network& net, const State& mu, const DiscreteCompFn& alpha)
{
    require_widths(net, mu, alpha.width(), "discrete_flow_signal");
    const auto& prefix = alpha.prefix();
    const auto& period = alpha.period();
    const std::size_t width = net.width();

    std::vector<State> values;
    std::uint32_t current = mu.packed();
    for (const auto& lambda : prefix) {
        current = step_packed(net, lambda.packed(), current);
        values.emplace_back(width, current);
    }

    // Past the prefix, step k is a function of (x(k-1), position in the
    // period); the first repeated pair closes the cycle.
    std::unordered_map<std::uint64_t, std::size_t> seen;
    const std::uint64_t p = period.size();
    for (std::size_t k = prefix.size();; ++k) {
        const std::uint64_t phase = (k - prefix.size()) % p;
        const std::uint64_t key = std::uint64_t{current} * p + phase;
        const auto [it, inserted] = seen.emplace(key, k);
        if (!inserted) {
            const auto split = values.begin() + static_cast<std::ptrdiff_t>(it->second);
            return DiscreteSignal(mu, StateStream({values.begin(), split}, {split, values.end()}));
        }
        current = step_packed(net, period[phase].packed(), current);
        values.emplace_back(width, current);
    }
}

State real_flow_at(const Network& net, const State& mu, const RealCompFn& rho, const Rational& t)
{
    require_widths(net, mu, rho.width(), "real_flow_at");
    const auto k = rho.times().last_at_or_before(t);
    if (!k) {
        return mu;
    }
    return discrete_flow_at(net, mu, rho.values(), static_cast<long long>(*k));
}

RealSignal real_flow_signal(const Network& net, const State& mu, const RealCompFn& rho)
{
    require_widths(net, mu, rho.width(), "real_flow_signal");
    auto discrete = discrete_flow_signal(net, mu, rho.values());
    return RealSignal(mu, rho.times(), discrete.values());
}

State synchronous_iterate(const Network& net, const State& mu, std::size_t k)
{
    State current = mu;
    for (std::size_t j = 0; j < k; ++j) {
        current = apply_full(net, current);
    }
    return current;
}

} // namespace asyncflow
