#include "asyncflow/signal.hpp"

#include <algorithm>

#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

// Smallest d dividing |cycle| with cycle[i] == cycle[(i + d) mod |cycle|].
std::size_t minimal_period(const std::vector<State>& cycle)
{
    const std::size_t c = cycle.size();
    for (std::size_t d = 1; d < c; ++d) {
        if (c % d != 0) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i + d < c && ok; ++i) {
            ok = cycle[i] == cycle[i + d];
        }
        if (ok) {
            return d;
        }
    }
    return c;
}

// Probes above this count mean the two periods are badly incommensurate.
constexpr std::size_t max_probe_instants = 1u << 22;

} // namespace

DiscreteSignal::DiscreteSignal(State initial, StateStream values)
    : initial_(std::move(initial)), values_(std::move(values))
{
    require_same_width(initial_, values_.cycle().front(), "discrete signal");
}

RealSignal::RealSignal(State initial, TimeSeq times, StateStream values)
    : initial_(std::move(initial)), times_(std::move(times)), values_(std::move(values))
{
    require_same_width(initial_, values_.cycle().front(), "real signal");
}

std::size_t RealSignal::periodic_from() const noexcept
{
    return std::max(values_.transient().size(), times_.head().size() - 1);
}

Rational RealSignal::time_period() const
{
    return times_.tail_step() * static_cast<std::int64_t>(minimal_period(values_.cycle()));
}

State eval_discrete(const DiscreteSignal& x, long long k)
{
    if (k < -1) {
        throw DomainError("discrete signals are defined for k >= -1, got " + std::to_string(k));
    }
    if (k == -1) {
        return x.initial();
    }
    return x.values().at(static_cast<std::size_t>(k));
}

State eval_real(const RealSignal& x, const Rational& t)
{
    if (const auto k = x.times().last_at_or_before(t)) {
        return x.values().at(*k);
    }
    return x.initial();
}

State left_limit(const RealSignal& x, const Rational& t)
{
    if (const auto k = x.times().last_before(t)) {
        return x.values().at(*k);
    }
    return x.initial();
}

DiscreteSignal shift_signal_discrete(const DiscreteSignal& x, std::size_t kp)
{
    if (kp == 0) {
        return x;
    }
    // New value at -1 is the old value at kp - 1.
    return DiscreteSignal(x.values().at(kp - 1), x.values().drop(kp));
}

RealSignal shift_signal_real(const RealSignal& x, const Rational& tp)
{
    const std::size_t k0 = x.times().first_at_or_after(tp);
    return RealSignal(left_limit(x, tp), x.times().drop(k0), x.values().drop(k0));
}

std::vector<Rational> canonical_probes(const RealSignal& x, const RealSignal& y)
{
    require_same_width(x.initial(), y.initial(), "canonical_probes");
    const Rational periodic = std::max(x.times().at(x.periodic_from()), y.times().at(y.periodic_from()));
    const Rational horizon = periodic + lcm(x.time_period(), y.time_period());

    std::vector<Rational> instants;
    for (const RealSignal* s : {&x, &y}) {
        for (std::size_t k = 0;; ++k) {
            Rational t = s->times().at(k);
            if (t > horizon) {
                break;
            }
            instants.push_back(t);
            if (instants.size() > max_probe_instants) {
                throw CapacityError("probe set exceeds " + std::to_string(max_probe_instants) + " instants");
            }
        }
    }
    std::sort(instants.begin(), instants.end());
    instants.erase(std::unique(instants.begin(), instants.end()), instants.end());

    std::vector<Rational> probes;
    probes.reserve(2 * instants.size() + 1);
    probes.push_back(instants.front() - 1);
    for (std::size_t i = 0; i < instants.size(); ++i) {
        probes.push_back(instants[i]);
        if (i + 1 < instants.size()) {
            probes.push_back((instants[i] + instants[i + 1]) / 2);
        }
    }
    return probes;
}

std::vector<Rational> canonical_probes(const RealSignal& x)
{
    return canonical_probes(x, x);
}

bool signals_equal(const RealSignal& x, const RealSignal& y)
{
    for (const auto& t : canonical_probes(x, y)) {
        if (eval_real(x, t) != eval_real(y, t)) {
            return false;
        }
    }
    return true;
}

std::optional<State> eventually_constant(const RealSignal& x)
{
    const auto& cycle = x.values().cycle();
    if (minimal_period(cycle) == 1) {
        return cycle.front();
    }
    return std::nullopt;
}

std::optional<Settling> settling(const RealSignal& x)
{
    const auto value = eventually_constant(x);
    if (!value) {
        return std::nullopt;
    }
    const auto& transient = x.values().transient();
    std::size_t k = transient.size();
    while (k > 0 && transient[k - 1] == *value) {
        --k;
    }
    if (k == 0 && x.initial() == *value) {
        return Settling{*value, std::nullopt};
    }
    return Settling{*value, x.times().at(k)};
}

nlohmann::json to_json(const DiscreteSignal& x, long long k_max)
{
    auto out = nlohmann::json::array();
    for (long long k = -1; k <= k_max; ++k) {
        out.push_back({{"k", k}, {"state", eval_discrete(x, k).to_string()}});
    }
    return out;
}

nlohmann::json to_json(const RealSignal& x, const Rational& until)
{
    struct Piece {
        std::optional<Rational> from;
        State state;
    };
    std::vector<Piece> pieces{{std::nullopt, x.initial()}};
    std::size_t next = 0;
    for (;; ++next) {
        const Rational t = x.times().at(next);
        if (t > until) {
            break;
        }
        const State& s = x.values().at(next);
        if (s != pieces.back().state) {
            pieces.push_back({t, s});
        }
    }

    const auto settled = settling(x);
    const auto open_ended = [&](const Piece& p) {
        if (!settled || settled->value != p.state) {
            return false;
        }
        if (!settled->from) {
            return true;
        }
        return p.from && *settled->from <= *p.from;
    };

    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        nlohmann::json entry;
        entry["from"] = p.from ? nlohmann::json(to_string(*p.from)) : nlohmann::json(nullptr);
        if (i + 1 < pieces.size()) {
            entry["to"] = to_string(*pieces[i + 1].from);
        } else if (open_ended(p)) {
            entry["to"] = nullptr;
        } else {
            std::size_t k = next;
            while (x.values().at(k) == p.state) {
                ++k;
            }
            entry["to"] = to_string(x.times().at(k));
        }
        entry["state"] = p.state.to_string();
        out.push_back(std::move(entry));
    }

    const std::size_t from = x.periodic_from();
    nlohmann::json marker;
    marker["cycle_from"] = to_string(x.times().at(from));
    marker["period"] = to_string(x.time_period());
    auto cycle = nlohmann::json::array();
    const std::size_t length = static_cast<std::size_t>((x.time_period() / x.times().tail_step()).numerator());
    for (std::size_t k = 0; k < length; ++k) {
        cycle.push_back(x.values().at(from + k).to_string());
    }
    marker["cycle"] = std::move(cycle);
    out.push_back(std::move(marker));
    return out;
}

} // namespace asyncflow
