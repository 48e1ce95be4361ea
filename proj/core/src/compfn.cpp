#include "asyncflow/compfn.hpp"

#include <algorithm>

#include "asyncflow/errors.hpp"

namespace asyncflow {

DiscreteCompFn::DiscreteCompFn(std::vector<State> prefix, std::vector<State> period)
    : masks_(std::move(prefix), std::move(period))
{
}

DiscreteCompFn DiscreteCompFn::constant(const State& lambda)
{
    return DiscreteCompFn({}, {lambda});
}

TimeSeq::TimeSeq(std::vector<Rational> head, Rational tail_step) : head_(std::move(head)), step_(tail_step)
{
    if (head_.empty()) {
        throw DomainError("time sequence needs at least one explicit instant");
    }
    if (step_ <= 0) {
        throw DomainError("time sequence tail step must be positive, got " + to_string(step_));
    }
    for (std::size_t k = 1; k < head_.size(); ++k) {
        if (!(head_[k - 1] < head_[k])) {
            throw DomainError("time instants must be strictly increasing: " + to_string(head_[k - 1]) + " then " +
                              to_string(head_[k]));
        }
    }
}

TimeSeq TimeSeq::arithmetic(Rational start, Rational step)
{
    return TimeSeq({start}, step);
}

Rational TimeSeq::at(std::size_t k) const
{
    if (k < head_.size()) {
        return head_[k];
    }
    return head_.back() + step_ * static_cast<std::int64_t>(k - head_.size() + 1);
}

std::optional<std::size_t> TimeSeq::last_at_or_before(const Rational& t) const
{
    if (t < head_.front()) {
        return std::nullopt;
    }
    if (t <= head_.back()) {
        const auto it = std::upper_bound(head_.begin(), head_.end(), t);
        return static_cast<std::size_t>(it - head_.begin()) - 1;
    }
    const std::int64_t steps = floor((t - head_.back()) / step_);
    return head_.size() - 1 + static_cast<std::size_t>(steps);
}

std::optional<std::size_t> TimeSeq::last_before(const Rational& t) const
{
    if (t <= head_.front()) {
        return std::nullopt;
    }
    if (t <= head_.back()) {
        const auto it = std::lower_bound(head_.begin(), head_.end(), t);
        return static_cast<std::size_t>(it - head_.begin()) - 1;
    }
    // Tail instants last + j*step with j >= 1 lie strictly below t iff j < q.
    const Rational q = (t - head_.back()) / step_;
    const std::int64_t ceil_q = -floor(-q);
    return head_.size() - 1 + static_cast<std::size_t>(ceil_q - 1);
}

std::optional<std::size_t> TimeSeq::index_of(const Rational& t) const
{
    const auto k = last_at_or_before(t);
    if (k && at(*k) == t) {
        return k;
    }
    return std::nullopt;
}

std::size_t TimeSeq::first_at_or_after(const Rational& t) const
{
    const auto k = last_before(t);
    return k ? *k + 1 : 0;
}

std::size_t TimeSeq::first_after(const Rational& t) const
{
    const auto k = last_at_or_before(t);
    return k ? *k + 1 : 0;
}

TimeSeq TimeSeq::drop(std::size_t count) const
{
    if (count < head_.size()) {
        return TimeSeq({head_.begin() + static_cast<std::ptrdiff_t>(count), head_.end()}, step_);
    }
    return TimeSeq({at(count)}, step_);
}

RealCompFn::RealCompFn(DiscreteCompFn values, TimeSeq times) : values_(std::move(values)), times_(std::move(times)) {}

State eval_alpha(const DiscreteCompFn& alpha, std::size_t k)
{
    return alpha.at(k);
}

DiscreteCompFn shift_discrete(const DiscreteCompFn& alpha, std::size_t kp)
{
    return DiscreteCompFn(alpha.masks().drop(kp));
}

bool is_progressive_discrete(const DiscreteCompFn& alpha)
{
    return alpha.masks().cycle_union().all();
}

State eval_rho(const RealCompFn& rho, const Rational& t)
{
    if (const auto k = rho.times().index_of(t)) {
        return rho.values().at(*k);
    }
    return State::zeros(rho.width());
}

RealCompFn shift_real(const RealCompFn& rho, const Rational& tp)
{
    const std::size_t k0 = rho.times().first_at_or_after(tp);
    return RealCompFn(shift_discrete(rho.values(), k0), rho.times().drop(k0));
}

RealCompFn restrict_after(const RealCompFn& rho, const Rational& tp)
{
    const std::size_t k0 = rho.times().first_after(tp);
    return RealCompFn(shift_discrete(rho.values(), k0), rho.times().drop(k0));
}

bool is_progressive_real(const RealCompFn& rho)
{
    return is_progressive_discrete(rho.values());
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> out;
    s = trim(s);
    if (s.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<State> parse_masks(std::string_view list)
{
    std::vector<State> out;
    for (auto item : split_list(list)) {
        out.push_back(State::parse(item));
    }
    return out;
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& format)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += format(items[i]);
    }
    return out;
}

} // namespace

DiscreteCompFn parse_compfn(std::string_view text)
{
    const std::string whole(text);
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("computation function '" + whole + "' lacks ';' before the period");
    }
    const auto period_text = trim(text.substr(semi + 1));
    if (period_text.size() < 2 || period_text.front() != '(' || period_text.back() != ')') {
        throw ParseError("computation function '" + whole + "': period must be written as (m0,m1,...)");
    }
    auto prefix = parse_masks(text.substr(0, semi));
    auto period = parse_masks(period_text.substr(1, period_text.size() - 2));
    if (period.empty()) {
        throw ParseError("computation function '" + whole + "': empty period");
    }
    try {
        return DiscreteCompFn(std::move(prefix), std::move(period));
    } catch (const Error& e) {
        throw ParseError("computation function '" + whole + "': " + e.what());
    }
}

std::string to_string(const DiscreteCompFn& alpha)
{
    const auto bits = [](const State& s) { return s.to_string(); };
    return join(alpha.prefix(), bits) + ";(" + join(alpha.period(), bits) + ")";
}

TimeSeq parse_time_seq(std::string_view text)
{
    const std::string whole(text);
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw ParseError("time sequence '" + whole + "' lacks ';+step'");
    }
    const auto step_text = trim(text.substr(semi + 1));
    if (step_text.empty() || step_text.front() != '+') {
        throw ParseError("time sequence '" + whole + "': tail step must be written as +step");
    }
    std::vector<Rational> head;
    for (auto item : split_list(text.substr(0, semi))) {
        head.push_back(parse_rational(item));
    }
    const Rational step = parse_rational(trim(step_text.substr(1)));
    try {
        return TimeSeq(std::move(head), step);
    } catch (const Error& e) {
        throw ParseError("time sequence '" + whole + "': " + e.what());
    }
}

std::string to_string(const TimeSeq& times)
{
    return join(times.head(), [](const Rational& r) { return to_string(r); }) + ";+" + to_string(times.tail_step());
}

} // namespace asyncflow
