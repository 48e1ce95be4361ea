#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "asyncflow/compfn.hpp"
#include "asyncflow/network.hpp"
#include "asyncflow/rational.hpp"
#include "asyncflow/state.hpp"

namespace asyncflow {

using Rng = std::mt19937_64;

// Independent stream for (seed, stream, index); the same triple always
// yields the same generator regardless of evaluation order.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

struct ScheduleBounds {
    std::size_t max_prefix = 4;
    std::size_t max_period = 4;
    std::size_t max_explicit_times = 4;
};

std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi); // uniform in [lo, hi]
State random_state(Rng& rng, std::size_t width);
// Uniform truth tables.
Network random_network(Rng& rng, std::size_t width);
DiscreteCompFn random_compfn(Rng& rng, std::size_t width, const ScheduleBounds& bounds);
// Coordinates missing from the period are forced on in one random slot.
DiscreteCompFn random_progressive_compfn(Rng& rng, std::size_t width, const ScheduleBounds& bounds);
// Like random_progressive_compfn, but guaranteed to leave one coordinate
// out of every period mask (requires width >= 1).
DiscreteCompFn random_non_progressive_compfn(Rng& rng, std::size_t width, const ScheduleBounds& bounds);
// Small rationals with denominators in {1, 2, 3, 4}.
Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi);
TimeSeq random_time_seq(Rng& rng, const ScheduleBounds& bounds);

} // namespace asyncflow
