#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asyncflow/rational.hpp"
#include "asyncflow/state.hpp"
#include "asyncflow/stream.hpp"

namespace asyncflow {

// Discrete-time computation function alpha : N -> B^n. alpha^k is the mask
// of coordinates computed at step k. Represented as prefix + period.
class DiscreteCompFn {
public:
    DiscreteCompFn(std::vector<State> prefix, std::vector<State> period);
    explicit DiscreteCompFn(StateStream masks) : masks_(std::move(masks)) {}

    // alpha^k = lambda for every k.
    static DiscreteCompFn constant(const State& lambda);

    std::size_t width() const noexcept { return masks_.width(); }
    const std::vector<State>& prefix() const noexcept { return masks_.transient(); }
    const std::vector<State>& period() const noexcept { return masks_.cycle(); }
    const StateStream& masks() const noexcept { return masks_; }

    const State& at(std::size_t k) const noexcept { return masks_.at(k); }

private:
    StateStream masks_;
};

// Strictly increasing, unbounded time instants t_0 < t_1 < ...: an explicit
// head followed by an arithmetic tail of step delta > 0,
// t_k = last + (k - |head| + 1) * delta for k >= |head|.
class TimeSeq {
public:
    TimeSeq(std::vector<Rational> head, Rational tail_step);

    // t_k = start + k * step.
    static TimeSeq arithmetic(Rational start, Rational step);

    const std::vector<Rational>& head() const noexcept { return head_; }
    const Rational& tail_step() const noexcept { return step_; }

    Rational at(std::size_t k) const;

    // k with t_k == t.
    std::optional<std::size_t> index_of(const Rational& t) const;
    // Largest k with t_k <= t (strictly <, respectively); empty below t_0.
    std::optional<std::size_t> last_at_or_before(const Rational& t) const;
    std::optional<std::size_t> last_before(const Rational& t) const;
    // Smallest k with t_k >= t (strictly >, respectively).
    std::size_t first_at_or_after(const Rational& t) const;
    std::size_t first_after(const Rational& t) const;

    // The sequence k -> t_{k + count}.
    TimeSeq drop(std::size_t count) const;

    friend bool operator==(const TimeSeq&, const TimeSeq&) = default;

private:
    std::vector<Rational> head_;
    Rational step_;
};

// Real-time computation function rho(t) = alpha^k if t = t_k, else 0^n.
class RealCompFn {
public:
    RealCompFn(DiscreteCompFn values, TimeSeq times);

    std::size_t width() const noexcept { return values_.width(); }
    const DiscreteCompFn& values() const noexcept { return values_; }
    const TimeSeq& times() const noexcept { return times_; }

private:
    DiscreteCompFn values_;
    TimeSeq times_;
};

State eval_alpha(const DiscreteCompFn& alpha, std::size_t k);
DiscreteCompFn shift_discrete(const DiscreteCompFn& alpha, std::size_t kp);
// Every coordinate is set in some period mask.
bool is_progressive_discrete(const DiscreteCompFn& alpha);

State eval_rho(const RealCompFn& rho, const Rational& t);
// rho restricted to [tp, inf); instants before tp are discarded.
RealCompFn shift_real(const RealCompFn& rho, const Rational& tp);
// rho restricted to the open interval (tp, inf).
RealCompFn restrict_after(const RealCompFn& rho, const Rational& tp);
bool is_progressive_real(const RealCompFn& rho);

// Text formats. alpha: "10,01;(11)" (prefix masks; period masks).
// Times: "0,1,3/2;+1/2" (explicit instants; tail step).
DiscreteCompFn parse_compfn(std::string_view text);
std::string to_string(const DiscreteCompFn& alpha);
TimeSeq parse_time_seq(std::string_view text);
std::string to_string(const TimeSeq& times);

} // namespace asyncflow
