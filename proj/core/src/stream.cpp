#include "asyncflow/stream.hpp"

#include <algorithm>

#include "asyncflow/errors.hpp"

namespace asyncflow {

StateStream::StateStream(std::vector<State> transient, std::vector<State> cycle)
    : transient_(std::move(transient)), cycle_(std::move(cycle))
{
    if (cycle_.empty()) {
        throw DomainError("periodic part must not be empty");
    }
    const State& first = cycle_.front();
    for (const auto& s : transient_) {
        require_same_width(first, s, "state stream");
    }
    for (const auto& s : cycle_) {
        require_same_width(first, s, "state stream");
    }
}

StateStream StateStream::drop(std::size_t count) const
{
    if (count <= transient_.size()) {
        return StateStream({transient_.begin() + static_cast<std::ptrdiff_t>(count), transient_.end()}, cycle_);
    }
    const std::size_t rotation = (count - transient_.size()) % cycle_.size();
    std::vector<State> rotated(cycle_);
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(rotation), rotated.end());
    return StateStream({}, std::move(rotated));
}

StateStream StateStream::prepend(const std::vector<State>& values) const
{
    std::vector<State> transient(values);
    transient.insert(transient.end(), transient_.begin(), transient_.end());
    return StateStream(std::move(transient), cycle_);
}

State StateStream::cycle_union() const
{
    State acc = State::zeros(width());
    for (const auto& s : cycle_) {
        acc = acc | s;
    }
    return acc;
}

} // namespace asyncflow
