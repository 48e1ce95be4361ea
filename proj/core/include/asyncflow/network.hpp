#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "asyncflow/state.hpp"

namespace asyncflow {

// The generating function Phi : B^n -> B^n, stored as explicit truth tables.
// Internally the n tables are packed column-wise: entry mu holds the whole
// image Phi(mu), so table i is bit i-1 of every entry.
class Network {
public:
    // tables[i-1][mu.packed()] is Phi_i(mu); every table has 2^n entries.
    static Network from_tables(const std::vector<std::vector<bool>>& tables);
    // images[mu.packed()] is Phi(mu).
    static Network from_images(std::size_t width, std::vector<std::uint32_t> images);
    static Network from_function(std::size_t width, const std::function<State(const State&)>& phi);

    static Network identity(std::size_t width);
    static Network constant(const State& value);

    std::size_t width() const noexcept { return width_; }
    std::size_t state_count() const noexcept { return images_.size(); }

    // Phi_i(mu), i 1-based.
    bool coordinate(std::size_t i, const State& mu) const;
    std::vector<bool> table(std::size_t i) const;
    std::span<const std::uint32_t> images() const noexcept { return images_; }

    // Unchecked lookup of the packed image.
    std::uint32_t image(std::uint32_t mu) const noexcept { return images_[mu]; }

    friend bool operator==(const Network&, const Network&) = default;

private:
    Network(std::size_t width, std::vector<std::uint32_t> images);

    std::size_t width_;
    std::vector<std::uint32_t> images_;
};

// The two-coordinate circuit used as the running example: the transitions
// (0,0)->(1,1), (0,1)->(0,1), (1,0)->(1,1), (1,1)->(1,0), i.e.
// Phi(mu) = (mu1 | !mu1 & !mu2, !mu1 | mu1 & !mu2).
Network example_circuit();

// Phi(mu) computed on all coordinates.
State apply_full(const Network& net, const State& mu);

// Phi^lambda(mu): coordinate i is Phi_i(mu) when lambda_i = 1, else mu_i.
State apply_masked(const Network& net, const State& lambda, const State& mu);

// Left fold of apply_masked over the word; the empty word returns mu.
State apply_word(const Network& net, std::span<const State> word, const State& mu);

// Unchecked packed-form step used by the simulation loops.
inline std::uint32_t step_packed(const Network& net, std::uint32_t lambda, std::uint32_t mu) noexcept
{
    return (net.image(mu) & lambda) | (mu & ~lambda);
}

} // namespace asyncflow
