#include <doctest.h>

#include "asyncflow/errors.hpp"
#include "asyncflow/generate.hpp"
#include "asyncflow/signal.hpp"

using namespace asyncflow;

namespace {

State S(const char* bits)
{
    return State::parse(bits);
}

Rational R(const char* text)
{
    return parse_rational(text);
}

RealSignal random_signal(Rng& rng, std::size_t n)
{
    const auto values = random_compfn(rng, n, {});
    return RealSignal(random_state(rng, n), random_time_seq(rng, {}), values.masks());
}

// Same function, different representation: one more explicit instant and
// the value cycle unrolled twice after one extra transient value.
RealSignal rerepresent(const RealSignal& x)
{
    std::vector<Rational> head = x.times().head();
    head.push_back(x.times().at(head.size()));
    std::vector<State> transient = x.values().transient();
    transient.push_back(x.values().at(transient.size()));
    std::vector<State> cycle;
    for (int rep = 0; rep < 2; ++rep) {
        for (std::size_t i = 0; i < x.values().cycle().size(); ++i) {
            cycle.push_back(x.values().at(transient.size() + i));
        }
    }
    return RealSignal(x.initial(), TimeSeq(head, x.times().tail_step()), StateStream(transient, cycle));
}

bool sampled_equal(const RealSignal& x, const RealSignal& y, Rng& rng)
{
    for (int i = 0; i < 400; ++i) {
        const Rational t = random_rational(rng, -10, 60);
        if (eval_real(x, t) != eval_real(y, t)) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("discrete signals start at -1")
{
    const DiscreteSignal x(S("00"), StateStream({S("01")}, {S("11"), S("10")}));
    CHECK(eval_discrete(x, -1) == S("00"));
    CHECK(eval_discrete(x, 0) == S("01"));
    CHECK(eval_discrete(x, 3) == S("11"));
    CHECK_THROWS_AS(eval_discrete(x, -2), DomainError);

    const auto shifted = shift_signal_discrete(x, 2);
    CHECK(eval_discrete(shifted, -1) == S("11"));
    CHECK(eval_discrete(shifted, 0) == S("10"));
    const auto same = shift_signal_discrete(x, 0);
    for (long long k = -1; k < 10; ++k) {
        CHECK(eval_discrete(same, k) == eval_discrete(x, k));
    }
}

TEST_CASE("discrete shifts compose")
{
    Rng rng = derive_rng(21, 0, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = random_index(rng, 1, 5);
        const DiscreteSignal x(random_state(rng, n), random_compfn(rng, n, {}).masks());
        const std::size_t a = random_index(rng, 0, 10);
        const std::size_t b = random_index(rng, 0, 10);
        const auto twice = shift_signal_discrete(shift_signal_discrete(x, a), b);
        const auto once = shift_signal_discrete(x, a + b);
        for (long long k = -1; k < 30; ++k) {
            REQUIRE(eval_discrete(twice, k) == eval_discrete(once, k));
            REQUIRE(eval_discrete(shift_signal_discrete(x, a), k) == eval_discrete(x, k + static_cast<long long>(a)));
        }
    }
}

TEST_CASE("real signals are right-continuous step functions")
{
    const RealSignal x(S("00"), parse_time_seq("0;+1"), StateStream({}, {S("11"), S("10")}));
    CHECK(eval_real(x, R("-1")) == S("00"));
    CHECK(eval_real(x, R("0")) == S("11"));
    CHECK(eval_real(x, R("1/2")) == S("11"));
    CHECK(eval_real(x, R("1")) == S("10"));
    CHECK(eval_real(x, R("5/2")) == S("11"));
    CHECK(left_limit(x, R("0")) == S("00"));
    CHECK(left_limit(x, R("1")) == S("11"));
    CHECK(x.periodic_from() == 0u);
    CHECK(x.time_period() == R("2"));
}

TEST_CASE("left limits and right continuity on random signals")
{
    Rng rng = derive_rng(21, 1, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const RealSignal x = random_signal(rng, random_index(rng, 1, 5));
        for (std::size_t k = 0; k < 10; ++k) {
            const Rational tk = x.times().at(k);
            const Rational gap = x.times().at(k + 1) - tk;
            const Rational eps = gap / 1000;
            // Right-continuous at every switch instant.
            CHECK(eval_real(x, tk) == eval_real(x, tk + eps));
            CHECK(left_limit(x, tk) == eval_real(x, tk - eps));
            CHECK(left_limit(x, tk + gap / 2) == eval_real(x, tk + gap / 2));
        }
    }
}

TEST_CASE("real shift: identity before tp is the left limit")
{
    Rng rng = derive_rng(21, 2, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const RealSignal x = random_signal(rng, random_index(rng, 1, 5));
        const Rational tp = trial % 2 ? x.times().at(random_index(rng, 0, 6)) : random_rational(rng, -3, 12);
        const RealSignal y = shift_signal_real(x, tp);
        for (int i = 0; i < 60; ++i) {
            const Rational t = random_rational(rng, -5, 25);
            CHECK(eval_real(y, t) == (t >= tp ? eval_real(x, t) : left_limit(x, tp)));
        }
        CHECK(eval_real(y, tp) == eval_real(x, tp));
    }
}

TEST_CASE("real shifts compose")
{
    Rng rng = derive_rng(21, 3, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const RealSignal x = random_signal(rng, random_index(rng, 1, 5));
        Rational a = random_rational(rng, -3, 10);
        Rational b = random_rational(rng, -3, 10);
        if (b < a) {
            std::swap(a, b);
        }
        CHECK(signals_equal(shift_signal_real(shift_signal_real(x, a), b), shift_signal_real(x, b)));
    }
}

TEST_CASE("signals_equal decides pointwise equality")
{
    Rng rng = derive_rng(21, 4, 0);
    Rng probe_rng = derive_rng(21, 5, 0);
    int equal = 0;
    int different = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = random_index(rng, 1, 2);
        const RealSignal x = random_signal(rng, n);
        CHECK(signals_equal(x, x));
        const RealSignal xr = rerepresent(x);
        CHECK(signals_equal(x, xr));
        CHECK(signals_equal(xr, x));

        const RealSignal y = random_signal(rng, n);
        const bool decided = signals_equal(x, y);
        CHECK(decided == signals_equal(y, x));
        const bool sampled = sampled_equal(x, y, probe_rng);
        if (decided) {
            CHECK(sampled);
        }
        (decided ? equal : different)++;
    }
    CHECK(different > 0);
}

TEST_CASE("canonical probes witness every difference")
{
    // Differ only far out in the periodic tail of y.
    const RealSignal x(S("0"), parse_time_seq("0;+1"), StateStream({}, {S("1"), S("0")}));
    const RealSignal y(S("0"), parse_time_seq("0;+1"), StateStream({}, {S("1"), S("0"), S("1"), S("0"), S("1"), S("1")}));
    CHECK_FALSE(signals_equal(x, y));
    // Differ only between instants of x.
    const RealSignal z(S("0"), parse_time_seq("0;+1/2"), StateStream({}, {S("1"), S("1"), S("0"), S("0")}));
    CHECK(signals_equal(x, z));
    const RealSignal w(S("0"), parse_time_seq("0;+1/2"), StateStream({}, {S("1"), S("0"), S("0"), S("0")}));
    CHECK_FALSE(signals_equal(x, w));
    // Differ only before t_0.
    const RealSignal v(S("1"), parse_time_seq("0;+1"), StateStream({}, {S("1"), S("0")}));
    CHECK_FALSE(signals_equal(x, v));
    CHECK_THROWS_AS(signals_equal(x, RealSignal(S("00"), parse_time_seq("0;+1"), StateStream({}, {S("00")}))),
                    DimensionError);
}

TEST_CASE("probes are sorted and include one point below every instant")
{
    Rng rng = derive_rng(21, 6, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const RealSignal x = random_signal(rng, 2);
        const RealSignal y = random_signal(rng, 2);
        const auto probes = canonical_probes(x, y);
        REQUIRE(probes.size() >= 2);
        CHECK(std::is_sorted(probes.begin(), probes.end()));
        CHECK(std::adjacent_find(probes.begin(), probes.end()) == probes.end());
        CHECK(probes.front() < x.times().at(0));
        CHECK(probes.front() < y.times().at(0));
    }
}

TEST_CASE("eventually constant signals")
{
    const RealSignal x(S("00"), parse_time_seq("0,1;+1"), StateStream({S("10")}, {S("01"), S("01")}));
    REQUIRE(eventually_constant(x).has_value());
    CHECK(*eventually_constant(x) == S("01"));
    const auto s = settling(x);
    REQUIRE(s.has_value());
    CHECK(s->value == S("01"));
    REQUIRE(s->from.has_value());
    CHECK(*s->from == R("1"));

    const RealSignal flat(S("01"), parse_time_seq("0;+1"), StateStream({}, {S("01")}));
    REQUIRE(settling(flat).has_value());
    CHECK_FALSE(settling(flat)->from.has_value());

    const RealSignal osc(S("00"), parse_time_seq("0;+1"), StateStream({}, {S("11"), S("10")}));
    CHECK_FALSE(eventually_constant(osc).has_value());
    CHECK_FALSE(settling(osc).has_value());
}

TEST_CASE("settling instant is the last switch")
{
    Rng rng = derive_rng(21, 7, 0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = random_index(rng, 1, 2);
        const RealSignal x = random_signal(rng, n);
        const auto s = settling(x);
        if (!s) {
            continue;
        }
        const Rational start = s->from ? *s->from : x.times().at(0) - 5;
        for (int i = 0; i < 40; ++i) {
            const Rational t = start + random_rational(rng, 0, 40);
            CHECK(eval_real(x, t) == s->value);
        }
        if (s->from) {
            CHECK(left_limit(x, *s->from) != s->value);
        }
    }
}

TEST_CASE("JSON traces")
{
    const DiscreteSignal d(S("00"), StateStream({}, {S("01")}));
    const auto dj = to_json(d, 1);
    REQUIRE(dj.size() == 3);
    CHECK(dj[0]["k"] == -1);
    CHECK(dj[0]["state"] == "00");
    CHECK(dj[2]["state"] == "01");

    const RealSignal x(S("00"), parse_time_seq("0;+1"), StateStream({}, {S("11"), S("10")}));
    const auto rj = to_json(x, R("2"));
    REQUIRE(rj.size() == 5);
    CHECK(rj[0]["from"].is_null());
    CHECK(rj[0]["to"] == "0");
    CHECK(rj[1]["state"] == "11");
    CHECK(rj[3]["from"] == "2");
    CHECK(rj[3]["to"] == "3");
    CHECK(rj[4]["cycle_from"] == "0");
    CHECK(rj[4]["period"] == "2");
    CHECK(rj[4]["cycle"] == nlohmann::json::array({"11", "10"}));

    const RealSignal settles(S("00"), parse_time_seq("0;+1"), StateStream({}, {S("01")}));
    const auto sj = to_json(settles, R("5"));
    REQUIRE(sj.size() == 3);
    CHECK(sj[1]["from"] == "0");
    CHECK(sj[1]["to"].is_null());
}
