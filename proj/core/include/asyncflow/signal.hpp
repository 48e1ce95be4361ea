#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "asyncflow/compfn.hpp"
#include "asyncflow/rational.hpp"
#include "asyncflow/state.hpp"
#include "asyncflow/stream.hpp"

namespace asyncflow {

// Discrete-time signal on N_- = {-1, 0, 1, ...}: x(-1) = initial, then the
// eventually periodic value stream.
class DiscreteSignal {
public:
    DiscreteSignal(State initial, StateStream values);

    std::size_t width() const noexcept { return initial_.width(); }
    const State& initial() const noexcept { return initial_; }
    const StateStream& values() const noexcept { return values_; }

private:
    State initial_;
    StateStream values_;
};

// Right-continuous piecewise-constant signal
//   x(t) = initial on (-inf, t_0),  x(t) = values(k) on [t_k, t_{k+1}).
class RealSignal {
public:
    RealSignal(State initial, TimeSeq times, StateStream values);

    std::size_t width() const noexcept { return initial_.width(); }
    const State& initial() const noexcept { return initial_; }
    const TimeSeq& times() const noexcept { return times_; }
    const StateStream& values() const noexcept { return values_; }

    // Index from which both the time tail and the value cycle are running;
    // on [t_k, inf) for k >= this index the signal repeats with period
    // cycle_length() * tail_step.
    std::size_t periodic_from() const noexcept;
    Rational time_period() const;

private:
    State initial_;
    TimeSeq times_;
    StateStream values_;
};

// k >= -1; DomainError otherwise.
State eval_discrete(const DiscreteSignal& x, long long k);
State eval_real(const RealSignal& x, const Rational& t);
// x(t - 0).
State left_limit(const RealSignal& x, const Rational& t);

DiscreteSignal shift_signal_discrete(const DiscreteSignal& x, std::size_t kp);
// x(t) for t >= tp, x(tp - 0) for t < tp.
RealSignal shift_signal_real(const RealSignal& x, const Rational& tp);

// Sorted probe instants that decide pointwise equality of x and y: one point
// below both t_0, every switch instant of either signal up to the common
// periodicity horizon, and the midpoints between consecutive instants.
std::vector<Rational> canonical_probes(const RealSignal& x, const RealSignal& y);
std::vector<Rational> canonical_probes(const RealSignal& x);

// Semantic (pointwise) equality; representations may differ.
bool signals_equal(const RealSignal& x, const RealSignal& y);

// The value the signal settles on, if its periodic tail is constant.
std::optional<State> eventually_constant(const RealSignal& x);

// For an eventually constant signal: the settled value and the instant from
// which the signal stays at it (empty `from` means the whole real line).
struct Settling {
    State value;
    std::optional<Rational> from;
};
std::optional<Settling> settling(const RealSignal& x);

// Trace exports.
//   discrete: [{"k": -1, "state": "00"}, ...] for k = -1..k_max
//   real: intervals {"from", "to", "state"} up to `until` (null = unbounded),
//         followed by a {"cycle_from": ..., "period": ..., "cycle": [...]} marker.
nlohmann::json to_json(const DiscreteSignal& x, long long k_max);
nlohmann::json to_json(const RealSignal& x, const Rational& until);

} // namespace asyncflow
