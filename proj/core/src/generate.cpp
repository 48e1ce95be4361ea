#include "asyncflow/generate.hpp"

#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<State> random_masks(Rng& rng, std::size_t width, std::size_t count)
{
    std::vector<State> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_state(rng, width));
    }
    return out;
}

// Sets every coordinate missing from the period in one random slot.
void cover_coordinates(Rng& rng, std::vector<State>& period, std::size_t skip)
{
    const std::size_t width = period.front().width();
    State covered = State::zeros(width);
    for (const auto& s : period) {
        covered = covered | s;
    }
    for (std::size_t i = 1; i <= width; ++i) {
        if (i != skip && !covered.test(i)) {
            auto& slot = period[random_index(rng, 0, period.size() - 1)];
            slot = slot.with(i, true);
        }
    }
}

} // namespace

Rng derive_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    return Rng(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index));
}

std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

State random_state(Rng& rng, std::size_t width)
{
    return State(width, static_cast<std::uint32_t>(rng()));
}

Network random_network(Rng& rng, std::size_t width)
{
    std::vector<std::uint32_t> images(std::size_t{1} << width);
    for (auto& image : images) {
        image = static_cast<std::uint32_t>(rng());
    }
    return Network::from_images(width, std::move(images));
}

DiscreteCompFn random_compfn(Rng& rng, std::size_t width, const ScheduleBounds& bounds)
{
    auto prefix = random_masks(rng, width, random_index(rng, 0, bounds.max_prefix));
    auto period = random_masks(rng, width, random_index(rng, 1, bounds.max_period));
    return DiscreteCompFn(std::move(prefix), std::move(period));
}

DiscreteCompFn random_progressive_compfn(Rng& rng, std::size_t width, const ScheduleBounds& bounds)
{
    auto prefix = random_masks(rng, width, random_index(rng, 0, bounds.max_prefix));
    auto period = random_masks(rng, width, random_index(rng, 1, bounds.max_period));
    cover_coordinates(rng, period, 0);
    return DiscreteCompFn(std::move(prefix), std::move(period));
}

DiscreteCompFn random_non_progressive_compfn(Rng& rng, std::size_t width, const ScheduleBounds& bounds)
{
    const std::size_t starved = random_index(rng, 1, width);
    auto prefix = random_masks(rng, width, random_index(rng, 0, bounds.max_prefix));
    auto period = random_masks(rng, width, random_index(rng, 1, bounds.max_period));
    for (auto& s : period) {
        s = s.with(starved, false);
    }
    cover_coordinates(rng, period, starved);
    return DiscreteCompFn(std::move(prefix), std::move(period));
}

Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    const auto den = static_cast<std::int64_t>(random_index(rng, 1, 4));
    const auto span = static_cast<std::size_t>((hi - lo) * den);
    return Rational(lo * den + static_cast<std::int64_t>(random_index(rng, 0, span)), den);
}

TimeSeq random_time_seq(Rng& rng, const ScheduleBounds& bounds)
{
    const auto positive = [&rng] {
        const auto den = static_cast<std::int64_t>(random_index(rng, 1, 4));
        return Rational(static_cast<std::int64_t>(random_index(rng, 1, static_cast<std::size_t>(2 * den))), den);
    };
    std::vector<Rational> head{random_rational(rng, -3, 3)};
    const std::size_t count = random_index(rng, 1, bounds.max_explicit_times);
    while (head.size() < count) {
        head.push_back(head.back() + positive());
    }
    return TimeSeq(std::move(head), positive());
}

} // namespace asyncflow
