#include "asyncflow/model.hpp"

#include <array>

#include "asyncflow/errors.hpp"
#include "asyncflow/flow.hpp"

namespace asyncflow {

namespace {

struct MutationName {
    Mutation mutation;
    std::string_view name;
};

constexpr std::array<MutationName, 7> names{{
    {Mutation::none, "none"},
    {Mutation::phi_at_minus_one, "phi-at-minus-one"},
    {Mutation::wrong_left_limit, "wrong-left-limit"},
    {Mutation::drop_first_mask, "drop-first-mask"},
    {Mutation::delayed_switch, "delayed-switch"},
    {Mutation::lookahead, "lookahead"},
    {Mutation::prefix_counts_as_progress, "prefix-counts-as-progress"},
}};

FlowModel make_reference()
{
    FlowModel m;
    m.discrete_at = [](const Network& net, const State& mu, const DiscreteCompFn& alpha, long long k) {
        return discrete_flow_at(net, mu, alpha, k);
    };
    m.discrete_signal = [](const Network& net, const State& mu, const DiscreteCompFn& alpha) {
        return discrete_flow_signal(net, mu, alpha);
    };
    m.real_signal = [](const Network& net, const State& mu, const RealCompFn& rho) {
        return real_flow_signal(net, mu, rho);
    };
    m.progressive = [](const DiscreteCompFn& alpha) { return is_progressive_discrete(alpha); };
    return m;
}

// Trajectory that ignores alpha^0: x(k) = Phi^{alpha^1 ... alpha^k}(mu).
StateStream without_first_mask(const Network& net, const State& mu, const DiscreteCompFn& alpha)
{
    return discrete_flow_signal(net, mu, shift_discrete(alpha, 1)).values().prepend({mu});
}

} // namespace

std::string_view to_string(Mutation m)
{
    for (const auto& entry : names) {
        if (entry.mutation == m) {
            return entry.name;
        }
    }
    return "unknown";
}

Mutation parse_mutation(std::string_view name)
{
    for (const auto& entry : names) {
        if (entry.name == name) {
            return entry.mutation;
        }
    }
    throw DomainError("unknown mutation '" + std::string(name) + "'");
}

std::vector<Mutation> all_mutations()
{
    std::vector<Mutation> out;
    for (const auto& entry : names) {
        if (entry.mutation != Mutation::none) {
            out.push_back(entry.mutation);
        }
    }
    return out;
}

const FlowModel& FlowModel::reference()
{
    static const FlowModel model = make_reference();
    return model;
}

FlowModel FlowModel::mutant(Mutation mutation)
{
    FlowModel m = make_reference();
    m.mutation = mutation;
    switch (mutation) {
    case Mutation::none:
        break;
    case Mutation::phi_at_minus_one:
        m.discrete_at = [](const Network& net, const State& mu, const DiscreteCompFn& alpha, long long k) {
            return k == -1 ? apply_full(net, mu) : discrete_flow_at(net, mu, alpha, k);
        };
        m.discrete_signal = [](const Network& net, const State& mu, const DiscreteCompFn& alpha) {
            return DiscreteSignal(apply_full(net, mu), discrete_flow_signal(net, mu, alpha).values());
        };
        break;
    case Mutation::wrong_left_limit:
        m.real_signal = [](const Network& net, const State& mu, const RealCompFn& rho) {
            const auto values = discrete_flow_signal(net, mu, rho.values()).values();
            return RealSignal(values.at(0), rho.times(), values);
        };
        break;
    case Mutation::drop_first_mask:
        m.discrete_at = [](const Network& net, const State& mu, const DiscreteCompFn& alpha, long long k) {
            return k == -1 ? mu : discrete_flow_at(net, mu, shift_discrete(alpha, 1), k - 1);
        };
        m.discrete_signal = [](const Network& net, const State& mu, const DiscreteCompFn& alpha) {
            return DiscreteSignal(mu, without_first_mask(net, mu, alpha));
        };
        m.real_signal = [](const Network& net, const State& mu, const RealCompFn& rho) {
            return RealSignal(mu, rho.times(), without_first_mask(net, mu, rho.values()));
        };
        break;
    case Mutation::delayed_switch:
        m.real_signal = [](const Network& net, const State& mu, const RealCompFn& rho) {
            return RealSignal(mu, rho.times(), discrete_flow_signal(net, mu, rho.values()).values().prepend({mu}));
        };
        break;
    case Mutation::lookahead:
        m.discrete_at = [](const Network& net, const State& mu, const DiscreteCompFn& alpha, long long k) {
            return k == -1 ? mu : discrete_flow_at(net, mu, alpha, k + 1);
        };
        m.discrete_signal = [](const Network& net, const State& mu, const DiscreteCompFn& alpha) {
            return DiscreteSignal(mu, discrete_flow_signal(net, mu, alpha).values().drop(1));
        };
        m.real_signal = [](const Network& net, const State& mu, const RealCompFn& rho) {
            return RealSignal(mu, rho.times(), discrete_flow_signal(net, mu, rho.values()).values().drop(1));
        };
        break;
    case Mutation::prefix_counts_as_progress:
        m.progressive = [](const DiscreteCompFn& alpha) {
            State seen = alpha.masks().cycle_union();
            for (const auto& lambda : alpha.prefix()) {
                seen = seen | lambda;
            }
            return seen.all();
        };
        break;
    }
    return m;
}

} // namespace asyncflow
