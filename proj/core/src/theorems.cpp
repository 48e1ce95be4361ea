#include "asyncflow/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "asyncflow/errors.hpp"
#include "asyncflow/flow.hpp"
#include "asyncflow/generate.hpp"
#include "asyncflow/netparse.hpp"
#include "asyncflow/signal.hpp"

namespace asyncflow {

namespace {

void require_widths(const Network& net, const State& mu, std::size_t schedule_width)
{
    if (mu.width() != net.width() || schedule_width != net.width()) {
        throw DimensionError("checker: network, state and schedule widths differ");
    }
}

Counterexample instance(std::string check, const Network& net, const State& mu)
{
    Counterexample c;
    c.add("check", std::move(check));
    c.add("network", print_network(to_network_file(net)));
    c.add("init", mu.to_string());
    return c;
}

void add_schedule(Counterexample& c, const std::string& prefix, const RealCompFn& rho)
{
    c.add(prefix + "alpha", to_string(rho.values()));
    c.add(prefix + "times", to_string(rho.times()));
}

void add_mismatch(Counterexample& c, const State& expected, const State& got)
{
    c.add("expected", expected.to_string());
    c.add("got", got.to_string());
}

} // namespace

std::string Counterexample::to_text() const
{
    std::ostringstream out;
    for (const auto& [key, value] : fields) {
        if (value.find('\n') == std::string::npos) {
            out << "  " << key << ": " << value << '\n';
            continue;
        }
        out << "  " << key << ":\n";
        std::istringstream lines(value);
        for (std::string line; std::getline(lines, line);) {
            out << "    " << line << '\n';
        }
    }
    return out.str();
}

nlohmann::json Counterexample::to_json() const
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : fields) {
        out[key] = value;
    }
    return out;
}

CheckResult check_consistency_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                       const FlowModel& model)
{
    require_widths(net, mu, alpha.width());
    const State got = model.discrete_at(net, mu, alpha, -1);
    if (got == mu) {
        return CheckResult::pass();
    }
    auto c = instance("consistency.discrete", net, mu);
    c.add("alpha", to_string(alpha));
    c.add("k", "-1");
    add_mismatch(c, mu, got);
    return CheckResult::fail(std::move(c));
}

CheckResult check_consistency_real(const Network& net, const State& mu, const RealCompFn& rho,
                                   const FlowModel& model)
{
    require_widths(net, mu, rho.width());
    const Rational t0 = rho.times().at(0);
    const State got = left_limit(model.real_signal(net, mu, rho), t0);
    if (got == mu) {
        return CheckResult::pass();
    }
    auto c = instance("consistency.real", net, mu);
    add_schedule(c, "", rho);
    c.add("probe", to_string(t0) + "-0");
    add_mismatch(c, mu, got);
    return CheckResult::fail(std::move(c));
}

CheckResult check_composition_shift_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                             std::size_t kp, long long k_max, const FlowModel& model)
{
    require_widths(net, mu, alpha.width());
    if (!is_progressive_discrete(alpha)) {
        throw PreconditionError("composition by shift needs a progressive computation function");
    }
    const auto shifted_flow = shift_signal_discrete(model.discrete_signal(net, mu, alpha), kp);
    const State start = model.discrete_at(net, mu, alpha, static_cast<long long>(kp) - 1);
    const auto shifted_alpha = shift_discrete(alpha, kp);
    for (long long k = -1; k <= k_max; ++k) {
        const State lhs = eval_discrete(shifted_flow, k);
        const State rhs = model.discrete_at(net, start, shifted_alpha, k);
        if (lhs != rhs) {
            auto c = instance("composition_shift.discrete", net, mu);
            c.add("alpha", to_string(alpha));
            c.add("shift", std::to_string(kp));
            c.add("k", std::to_string(k));
            add_mismatch(c, lhs, rhs);
            return CheckResult::fail(std::move(c));
        }
    }
    return CheckResult::pass();
}

CheckResult check_composition_shift_real(const Network& net, const State& mu, const RealCompFn& rho,
                                         const Rational& tp, const FlowModel& model)
{
    require_widths(net, mu, rho.width());
    if (!is_progressive_real(rho)) {
        throw PreconditionError("composition by shift needs a progressive computation function");
    }
    const RealSignal flow = model.real_signal(net, mu, rho);
    const RealSignal lhs = shift_signal_real(flow, tp);
    const RealSignal rhs = model.real_signal(net, left_limit(flow, tp), shift_real(rho, tp));
    for (const auto& t : canonical_probes(lhs, rhs)) {
        const State a = eval_real(lhs, t);
        const State b = eval_real(rhs, t);
        if (a != b) {
            auto c = instance("composition_shift.real", net, mu);
            add_schedule(c, "", rho);
            c.add("shift", to_string(tp));
            c.add("probe", to_string(t));
            add_mismatch(c, a, b);
            return CheckResult::fail(std::move(c));
        }
    }
    return CheckResult::pass();
}

CheckResult check_composition_restart_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                               long long kp, long long k_max, const FlowModel& model)
{
    require_widths(net, mu, alpha.width());
    if (kp < -1) {
        throw DomainError("restart index must be >= -1");
    }
    const State start = model.discrete_at(net, mu, alpha, kp);
    const auto shifted_alpha = shift_discrete(alpha, static_cast<std::size_t>(kp + 1));
    for (long long k = kp; k <= k_max; ++k) {
        const State lhs = model.discrete_at(net, mu, alpha, k);
        const State rhs = model.discrete_at(net, start, shifted_alpha, k - kp - 1);
        if (lhs != rhs) {
            auto c = instance("composition_restart.discrete", net, mu);
            c.add("alpha", to_string(alpha));
            c.add("restart", std::to_string(kp));
            c.add("k", std::to_string(k));
            add_mismatch(c, lhs, rhs);
            return CheckResult::fail(std::move(c));
        }
    }
    return CheckResult::pass();
}

CheckResult check_composition_restart_real(const Network& net, const State& mu, const RealCompFn& rho,
                                           const Rational& tp, const FlowModel& model)
{
    require_widths(net, mu, rho.width());
    const RealSignal flow = model.real_signal(net, mu, rho);
    const RealSignal restarted = model.real_signal(net, eval_real(flow, tp), restrict_after(rho, tp));
    auto probes = canonical_probes(flow, restarted);
    probes.push_back(tp);
    for (const auto& t : probes) {
        if (t < tp) {
            continue;
        }
        const State a = eval_real(flow, t);
        const State b = eval_real(restarted, t);
        if (a != b) {
            auto c = instance("composition_restart.real", net, mu);
            add_schedule(c, "", rho);
            c.add("restart", to_string(tp));
            c.add("probe", to_string(t));
            add_mismatch(c, a, b);
            return CheckResult::fail(std::move(c));
        }
    }
    return CheckResult::pass();
}

CheckResult check_causality_discrete(const Network& net, const State& mu, const DiscreteCompFn& alpha,
                                     const DiscreteCompFn& beta, std::size_t k, const FlowModel& model)
{
    require_widths(net, mu, alpha.width());
    require_widths(net, mu, beta.width());
    for (std::size_t j = 0; j <= k; ++j) {
        if (alpha.at(j) != beta.at(j)) {
            throw PreconditionError("causality needs alpha and beta to agree on 0.." + std::to_string(k) +
                                    ", they differ at " + std::to_string(j));
        }
    }
    for (long long j = -1; j <= static_cast<long long>(k); ++j) {
        const State a = model.discrete_at(net, mu, alpha, j);
        const State b = model.discrete_at(net, mu, beta, j);
        if (a != b) {
            auto c = instance("causality.discrete", net, mu);
            c.add("alpha", to_string(alpha));
            c.add("beta", to_string(beta));
            c.add("k", std::to_string(j));
            add_mismatch(c, a, b);
            return CheckResult::fail(std::move(c));
        }
    }
    return CheckResult::pass();
}

CheckResult check_causality_real(const Network& net, const State& mu, const RealCompFn& rho, const RealCompFn& rho2,
                                 const Rational& tp, const FlowModel& model)
{
    require_widths(net, mu, rho.width());
    require_widths(net, mu, rho2.width());
    for (const RealCompFn* r : {&rho, &rho2}) {
        for (std::size_t k = 0; r->times().at(k) <= tp; ++k) {
            const Rational t = r->times().at(k);
            if (eval_rho(rho, t) != eval_rho(rho2, t)) {
                throw PreconditionError("causality needs rho and rho' to agree up to " + to_string(tp) +
                                        ", they differ at " + to_string(t));
            }
        }
    }
    const State a = eval_real(model.real_signal(net, mu, rho), tp);
    const State b = eval_real(model.real_signal(net, mu, rho2), tp);
    if (a == b) {
        return CheckResult::pass();
    }
    auto c = instance("causality.real", net, mu);
    add_schedule(c, "", rho);
    add_schedule(c, "other_", rho2);
    c.add("probe", to_string(tp));
    add_mismatch(c, a, b);
    return CheckResult::fail(std::move(c));
}

CheckResult check_progressiveness_shift(const DiscreteCompFn& alpha, std::size_t kp, const FlowModel& model)
{
    const bool before = model.progressive(alpha);
    const bool after = model.progressive(shift_discrete(alpha, kp));
    if (before == after) {
        return CheckResult::pass();
    }
    Counterexample c;
    c.add("check", "progressive_shift.discrete");
    c.add("alpha", to_string(alpha));
    c.add("shift", std::to_string(kp));
    c.add("progressive", before ? "true" : "false");
    c.add("progressive_after_shift", after ? "true" : "false");
    return CheckResult::fail(std::move(c));
}

CheckResult check_progressiveness_shift(const RealCompFn& rho, const Rational& tp, const FlowModel& model)
{
    const bool before = model.progressive(rho.values());
    const bool after = model.progressive(shift_real(rho, tp).values());
    if (before == after) {
        return CheckResult::pass();
    }
    Counterexample c;
    c.add("check", "progressive_shift.real");
    add_schedule(c, "", rho);
    c.add("shift", to_string(tp));
    c.add("progressive", before ? "true" : "false");
    c.add("progressive_after_shift", after ? "true" : "false");
    return CheckResult::fail(std::move(c));
}

void FuzzConfig::validate() const
{
    if (n_min < 1 || n_max > State::max_width || n_min > n_max) {
        throw DomainError("fuzz widths must satisfy 1 <= n_min <= n_max <= 20");
    }
    if (max_period < 1 || max_explicit_times < 1 || k_max < 0) {
        throw DomainError("fuzz bounds must be positive");
    }
}

bool SuiteReport::passed() const noexcept
{
    return std::all_of(theorems.begin(), theorems.end(), [](const auto& t) { return t.passed(); });
}

const TheoremReport* SuiteReport::find(std::string_view name) const
{
    for (const auto& t : theorems) {
        if (t.name == name) {
            return &t;
        }
    }
    return nullptr;
}

std::string SuiteReport::to_text() const
{
    std::ostringstream out;
    out << std::left << std::setw(30) << "checker" << std::right << std::setw(10) << "trials" << std::setw(10)
        << "failures" << "  status\n";
    for (const auto& t : theorems) {
        out << std::left << std::setw(30) << t.name << std::right << std::setw(10) << t.trials << std::setw(10)
            << t.failures << "  " << (t.passed() ? "PASS" : "FAIL") << '\n';
    }
    out << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& t : theorems) {
        if (t.first_counterexample) {
            out << "\nfirst counterexample for " << t.name << ":\n" << t.first_counterexample->to_text();
        }
    }
    return out.str();
}

nlohmann::json SuiteReport::to_json() const
{
    auto list = nlohmann::json::array();
    for (const auto& t : theorems) {
        list.push_back({{"name", t.name},
                        {"trials", t.trials},
                        {"failures", t.failures},
                        {"passed", t.passed()},
                        {"counterexample", t.first_counterexample ? t.first_counterexample->to_json()
                                                                  : nlohmann::json(nullptr)}});
    }
    return {{"passed", passed()}, {"theorems", std::move(list)}};
}

const std::vector<std::string>& checker_names()
{
    static const std::vector<std::string> names{
        "progressive_shift.discrete", "progressive_shift.real",     "consistency.discrete",
        "consistency.real",           "composition_shift.discrete", "composition_shift.real",
        "composition_restart.discrete", "composition_restart.real", "causality.discrete",
        "causality.real",
    };
    return names;
}

namespace {

enum Checker : std::size_t {
    progressive_discrete,
    progressive_real,
    consistency_discrete,
    consistency_real,
    shift_discrete_check,
    shift_real_check,
    restart_discrete,
    restart_real,
    causality_discrete,
    causality_real,
    checker_count,
};

// Covers the boundary cases of the real-time proofs: below t_0, exactly on
// an instant, strictly between two instants, and anywhere.
Rational pick_cut(Rng& rng, const TimeSeq& times)
{
    const std::size_t k = random_index(rng, 0, times.head().size() + 3);
    switch (random_index(rng, 0, 3)) {
    case 0:
        return times.at(0) - random_rational(rng, 0, 3) - Rational(1, 4);
    case 1:
        return times.at(k);
    case 2: {
        const Rational a = times.at(k);
        const Rational b = times.at(k + 1);
        const auto num = static_cast<std::int64_t>(random_index(rng, 1, 3));
        return a + (b - a) * Rational(num, 4);
    }
    default:
        return times.at(0) + random_rational(rng, -2, 8);
    }
}

// beta agrees with alpha on 0..k and differs at k + 1.
DiscreteCompFn tail_mutation(Rng& rng, const DiscreteCompFn& alpha, std::size_t k, const ScheduleBounds& bounds)
{
    const std::size_t width = alpha.width();
    std::vector<State> prefix;
    for (std::size_t j = 0; j <= k; ++j) {
        prefix.push_back(alpha.at(j));
    }
    State flip = random_state(rng, width);
    if (flip.none()) {
        flip = flip.with(random_index(rng, 1, width), true);
    }
    prefix.push_back(alpha.at(k + 1) ^ flip);
    const auto tail = random_progressive_compfn(rng, width, bounds);
    for (const auto& s : tail.prefix()) {
        prefix.push_back(s);
    }
    return DiscreteCompFn(std::move(prefix), tail.period());
}

// rho2 agrees with rho on (-inf, tp] and has a different mask at its first
// instant after tp.
RealCompFn tail_mutation(Rng& rng, const RealCompFn& rho, const Rational& tp, const ScheduleBounds& bounds)
{
    const std::size_t width = rho.width();
    const auto last = rho.times().last_at_or_before(tp);
    const std::size_t kept = last ? *last + 1 : 0;

    std::vector<Rational> head;
    std::vector<State> prefix;
    for (std::size_t j = 0; j < kept; ++j) {
        head.push_back(rho.times().at(j));
        prefix.push_back(rho.values().at(j));
    }
    const Rational first_after = rho.times().at(kept);
    head.push_back(random_index(rng, 0, 1) == 0 ? first_after : tp + random_rational(rng, 0, 2) + Rational(1, 4));
    State flip = random_state(rng, width);
    if (flip.none()) {
        flip = flip.with(random_index(rng, 1, width), true);
    }
    prefix.push_back(rho.values().at(kept) ^ flip);
    const std::size_t extra = random_index(rng, 0, bounds.max_explicit_times);
    for (std::size_t j = 0; j < extra; ++j) {
        head.push_back(head.back() + random_rational(rng, 0, 2) + Rational(1, 4));
    }
    const auto tail = random_progressive_compfn(rng, width, bounds);
    for (const auto& s : tail.prefix()) {
        prefix.push_back(s);
    }
    return RealCompFn(DiscreteCompFn(std::move(prefix), tail.period()),
                      TimeSeq(std::move(head), random_rational(rng, 0, 2) + Rational(1, 4)));
}

CheckResult run_trial(std::size_t checker, Rng& rng, const FuzzConfig& config, const FlowModel& model,
                      const Network* fixed)
{
    const ScheduleBounds bounds{config.max_prefix, config.max_period, config.max_explicit_times};
    const std::size_t width = fixed ? fixed->width() : random_index(rng, config.n_min, config.n_max);
    const Network net = fixed ? *fixed : random_network(rng, width);
    const State mu = random_state(rng, width);
    const auto any_schedule = [&] {
        return random_index(rng, 0, 1) == 0 ? random_progressive_compfn(rng, width, bounds)
                                            : random_non_progressive_compfn(rng, width, bounds);
    };
    const auto real_schedule = [&](DiscreteCompFn values) {
        return RealCompFn(std::move(values), random_time_seq(rng, bounds));
    };

    switch (checker) {
    case progressive_discrete: {
        const auto alpha = any_schedule();
        const std::size_t kp = random_index(rng, 0, 1) == 0 ? 1 : random_index(rng, 0, 10);
        return check_progressiveness_shift(alpha, kp, model);
    }
    case progressive_real: {
        const auto rho = real_schedule(any_schedule());
        return check_progressiveness_shift(rho, pick_cut(rng, rho.times()), model);
    }
    case consistency_discrete:
        return check_consistency_discrete(net, mu, random_progressive_compfn(rng, width, bounds), model);
    case consistency_real:
        return check_consistency_real(net, mu, real_schedule(random_progressive_compfn(rng, width, bounds)), model);
    case shift_discrete_check: {
        const auto alpha = random_progressive_compfn(rng, width, bounds);
        const std::size_t kp = random_index(rng, 0, 3) == 0 ? 0 : random_index(rng, 1, 6);
        return check_composition_shift_discrete(net, mu, alpha, kp, config.k_max, model);
    }
    case shift_real_check: {
        const auto rho = real_schedule(random_progressive_compfn(rng, width, bounds));
        return check_composition_shift_real(net, mu, rho, pick_cut(rng, rho.times()), model);
    }
    case restart_discrete: {
        const auto alpha = random_progressive_compfn(rng, width, bounds);
        const long long kp = static_cast<long long>(random_index(rng, 0, 7)) - 1;
        return check_composition_restart_discrete(net, mu, alpha, kp, config.k_max, model);
    }
    case restart_real: {
        const auto rho = real_schedule(random_progressive_compfn(rng, width, bounds));
        return check_composition_restart_real(net, mu, rho, pick_cut(rng, rho.times()), model);
    }
    case causality_discrete: {
        const auto alpha = random_progressive_compfn(rng, width, bounds);
        const std::size_t k = random_index(rng, 0, 12);
        const auto beta = random_index(rng, 0, 7) == 0 ? alpha : tail_mutation(rng, alpha, k, bounds);
        return check_causality_discrete(net, mu, alpha, beta, k, model);
    }
    case causality_real: {
        const auto rho = real_schedule(random_progressive_compfn(rng, width, bounds));
        const Rational tp = pick_cut(rng, rho.times());
        const auto rho2 = random_index(rng, 0, 7) == 0 ? rho : tail_mutation(rng, rho, tp, bounds);
        return check_causality_real(net, mu, rho, rho2, tp, model);
    }
    default:
        throw DomainError("unknown checker");
    }
}

struct Tally {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t first_index = 0;
    std::optional<Counterexample> first;

    void record(std::size_t index, CheckResult result)
    {
        trials += result.trials;
        if (result.passed) {
            return;
        }
        ++failures;
        if (!first || index < first_index) {
            first_index = index;
            first = std::move(result.counterexample);
        }
    }

    void merge(Tally other)
    {
        trials += other.trials;
        failures += other.failures;
        if (other.first && (!first || other.first_index < first_index)) {
            first_index = other.first_index;
            first = std::move(other.first);
        }
    }
};

CheckResult guarded(const std::function<CheckResult()>& run)
{
    try {
        return run();
    } catch (const std::exception& e) {
        Counterexample c;
        c.add("error", e.what());
        return CheckResult::fail(std::move(c));
    }
}

// Runs `jobs` independent units over a thread pool and merges the tallies
// per checker. Units are identified by index, so the outcome does not
// depend on scheduling.
std::vector<Tally> run_parallel(std::size_t jobs, unsigned threads,
                                const std::function<void(std::size_t, std::vector<Tally>&)>& unit)
{
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
    std::atomic<std::size_t> next{0};
    std::vector<Tally> merged(checker_count);
    std::mutex lock;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            std::vector<Tally> local(checker_count);
            for (std::size_t job; (job = next.fetch_add(1)) < jobs;) {
                unit(job, local);
            }
            std::lock_guard guard(lock);
            for (std::size_t c = 0; c < checker_count; ++c) {
                merged[c].merge(std::move(local[c]));
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return merged;
}

SuiteReport to_report(std::vector<Tally> tallies, const std::vector<std::size_t>& which)
{
    SuiteReport report;
    for (std::size_t c : which) {
        report.theorems.push_back(
            {checker_names()[c], tallies[c].trials, tallies[c].failures, std::move(tallies[c].first)});
    }
    return report;
}

} // namespace

SuiteReport run_fuzz_suite(const FuzzConfig& config, const FlowModel& model, const Network* fixed)
{
    config.validate();
    constexpr std::size_t chunk = 64;
    const std::size_t chunks = (config.trials + chunk - 1) / chunk;
    auto tallies = run_parallel(chunks * checker_count, config.threads, [&](std::size_t job, std::vector<Tally>& out) {
        const std::size_t checker = job % checker_count;
        const std::size_t begin = (job / checker_count) * chunk;
        const std::size_t end = std::min(config.trials, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) {
            Rng rng = derive_rng(config.seed, checker, i);
            out[checker].record(i, guarded([&] { return run_trial(checker, rng, config, model, fixed); }));
        }
    });
    std::vector<std::size_t> all(checker_count);
    for (std::size_t c = 0; c < checker_count; ++c) {
        all[c] = c;
    }
    return to_report(std::move(tallies), all);
}

std::vector<DiscreteCompFn> schedule_battery(std::size_t width)
{
    std::vector<DiscreteCompFn> battery;
    const State all = State::ones(width);
    const State none = State::zeros(width);
    std::vector<State> round_robin;
    for (std::size_t i = 1; i <= width; ++i) {
        round_robin.push_back(none.with(i, true));
    }
    std::vector<State> reversed(round_robin.rbegin(), round_robin.rend());

    battery.emplace_back(std::vector<State>{}, std::vector<State>{all});
    battery.emplace_back(std::vector<State>{}, round_robin);
    battery.emplace_back(std::vector<State>{}, reversed);
    battery.emplace_back(std::vector<State>{none}, std::vector<State>{all});
    battery.emplace_back(std::vector<State>{none, none, none}, round_robin);
    battery.emplace_back(std::vector<State>{round_robin.front()}, std::vector<State>{all, none});
    battery.emplace_back(std::vector<State>{all}, reversed);
    battery.emplace_back(std::vector<State>{reversed.front(), none}, std::vector<State>{none, all});

    const ScheduleBounds bounds{4, 4, 4};
    for (std::size_t i = battery.size(); i < 20; ++i) {
        Rng rng = derive_rng(0x5eedba77e5ULL, width, i);
        battery.push_back(random_progressive_compfn(rng, width, bounds));
    }
    return battery;
}

SuiteReport run_exhaustive_small(const FlowModel& model, long long k_max)
{
    struct Job {
        std::size_t width;
        std::uint64_t code;
    };
    std::vector<Job> jobs;
    for (std::size_t width = 1; width <= 2; ++width) {
        const std::size_t states = std::size_t{1} << width;
        const std::uint64_t networks = std::uint64_t{1} << (width * states);
        for (std::uint64_t code = 0; code < networks; ++code) {
            jobs.push_back({width, code});
        }
    }
    const std::vector<DiscreteCompFn> batteries[2] = {schedule_battery(1), schedule_battery(2)};

    auto tallies = run_parallel(jobs.size(), 0, [&](std::size_t index, std::vector<Tally>& out) {
        const auto [width, code] = jobs[index];
        const std::size_t states = std::size_t{1} << width;
        std::vector<std::uint32_t> images(states);
        for (std::size_t mu = 0; mu < states; ++mu) {
            images[mu] = static_cast<std::uint32_t>((code >> (mu * width)) & State::full_mask(width));
        }
        const Network net = Network::from_images(width, std::move(images));
        const auto& battery = batteries[width - 1];
        std::size_t unit = index * states * battery.size() * 16;
        const auto record = [&](std::size_t checker, const std::function<CheckResult()>& run) {
            out[checker].record(unit++, guarded(run));
        };
        for (std::size_t m = 0; m < states; ++m) {
            const State mu(width, static_cast<std::uint32_t>(m));
            for (std::size_t s = 0; s < battery.size(); ++s) {
                const auto& alpha = battery[s];
                const auto& other = battery[(s + 7) % battery.size()];
                record(progressive_discrete, [&] { return check_progressiveness_shift(alpha, 1, model); });
                record(consistency_discrete, [&] { return check_consistency_discrete(net, mu, alpha, model); });
                for (std::size_t kp : {0, 1, 3}) {
                    record(shift_discrete_check, [&] {
                        return check_composition_shift_discrete(net, mu, alpha, kp, k_max, model);
                    });
                }
                for (long long kp : {-1, 0, 2}) {
                    record(restart_discrete, [&] {
                        return check_composition_restart_discrete(net, mu, alpha, kp, k_max, model);
                    });
                }
                for (std::size_t k : {0, 2}) {
                    // Same masks on 0..k, then another battery schedule.
                    std::vector<State> head;
                    for (std::size_t j = 0; j <= k; ++j) {
                        head.push_back(alpha.at(j));
                    }
                    for (const auto& lambda : other.prefix()) {
                        head.push_back(lambda);
                    }
                    const DiscreteCompFn beta(std::move(head), other.period());
                    record(causality_discrete,
                           [&] { return check_causality_discrete(net, mu, alpha, beta, k, model); });
                }
            }
        }
    });
    return to_report(std::move(tallies), {progressive_discrete, consistency_discrete, shift_discrete_check,
                                          restart_discrete, causality_discrete});
}

} // namespace asyncflow
