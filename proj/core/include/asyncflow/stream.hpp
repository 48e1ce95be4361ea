#pragma once

#include <cstddef>
#include <vector>

#include "asyncflow/state.hpp"

namespace asyncflow {

// An eventually periodic sequence of states indexed from 0: the transient
// values first, then the cycle repeated forever. The cycle is never empty,
// so the sequence is total on N.
class StateStream {
public:
    StateStream(std::vector<State> transient, std::vector<State> cycle);

    std::size_t width() const noexcept { return cycle_.front().width(); }
    const std::vector<State>& transient() const noexcept { return transient_; }
    const std::vector<State>& cycle() const noexcept { return cycle_; }

    const State& at(std::size_t k) const noexcept
    {
        if (k < transient_.size()) {
            return transient_[k];
        }
        return cycle_[(k - transient_.size()) % cycle_.size()];
    }

    // The stream k -> at(k + count). Consumes transient first, then rotates
    // the cycle.
    StateStream drop(std::size_t count) const;

    // Prepends values in front of index 0.
    StateStream prepend(const std::vector<State>& values) const;

    // Every value that occurs infinitely often, OR-ed together.
    State cycle_union() const;

private:
    std::vector<State> transient_;
    std::vector<State> cycle_;
};

} // namespace asyncflow
