#pragma once

#include <cstddef>

#include "asyncflow/generate.hpp"
#include "asyncflow/netparse.hpp"

namespace asyncflow::testing {

// Random expression over x1..xn of depth at most `depth`.
inline BoolExpr random_expr(Rng& rng, std::size_t n, int depth)
{
    using Kind = BoolExpr::Kind;
    const auto sub = [&] { return random_expr(rng, n, depth - 1); };
    switch (random_index(rng, 0, depth <= 0 ? 1 : 5)) {
    case 0:
        return BoolExpr::variable(random_index(rng, 1, n));
    case 1:
        return random_index(rng, 0, 5) == 0 ? BoolExpr::constant(random_index(rng, 0, 1) == 1)
                                            : BoolExpr::variable(random_index(rng, 1, n));
    case 2:
        return BoolExpr::negation(sub());
    case 3: {
        auto lhs = sub();
        return BoolExpr::binary(Kind::conjunction, lhs, sub());
    }
    case 4: {
        auto lhs = sub();
        return BoolExpr::binary(Kind::exclusive_or, lhs, sub());
    }
    default: {
        auto lhs = sub();
        return BoolExpr::binary(Kind::disjunction, lhs, sub());
    }
    }
}

inline NetworkFile random_network_file(Rng& rng, std::size_t n, int depth)
{
    NetworkFile file;
    file.width = n;
    for (std::size_t i = 0; i < n; ++i) {
        file.equations.push_back(random_expr(rng, n, depth));
    }
    return file;
}

} // namespace asyncflow::testing
