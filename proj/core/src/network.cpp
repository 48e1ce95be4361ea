#include "asyncflow/network.hpp"

#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

std::size_t checked_state_count(std::size_t width)
{
    if (width == 0 || width > State::max_width) {
        throw CapacityError("network width " + std::to_string(width) + " outside [1, 20]");
    }
    return std::size_t{1} << width;
}

void require_width(const Network& net, const State& s, std::string_view context)
{
    if (s.width() != net.width()) {
        throw DimensionError(std::string(context) + ": state width " + std::to_string(s.width()) +
                             " vs network width " + std::to_string(net.width()));
    }
}

} // namespace

Network::Network(std::size_t width, std::vector<std::uint32_t> images)
    : width_(width), images_(std::move(images))
{
}

Network Network::from_tables(const std::vector<std::vector<bool>>& tables)
{
    const std::size_t width = tables.size();
    const std::size_t count = checked_state_count(width);
    std::vector<std::uint32_t> images(count, 0);
    for (std::size_t i = 0; i < width; ++i) {
        if (tables[i].size() != count) {
            throw DimensionError("truth table " + std::to_string(i + 1) + " has " + std::to_string(tables[i].size()) +
                                 " entries, expected " + std::to_string(count));
        }
        for (std::size_t mu = 0; mu < count; ++mu) {
            if (tables[i][mu]) {
                images[mu] |= std::uint32_t{1} << i;
            }
        }
    }
    return Network(width, std::move(images));
}

Network Network::from_images(std::size_t width, std::vector<std::uint32_t> images)
{
    const std::size_t count = checked_state_count(width);
    if (images.size() != count) {
        throw DimensionError("image table has " + std::to_string(images.size()) + " entries, expected " +
                             std::to_string(count));
    }
    for (auto& image : images) {
        image &= State::full_mask(width);
    }
    return Network(width, std::move(images));
}

Network Network::from_function(std::size_t width, const std::function<State(const State&)>& phi)
{
    const std::size_t count = checked_state_count(width);
    std::vector<std::uint32_t> images(count);
    for (std::size_t mu = 0; mu < count; ++mu) {
        const State out = phi(State(width, static_cast<std::uint32_t>(mu)));
        if (out.width() != width) {
            throw DimensionError("function returned a state of width " + std::to_string(out.width()));
        }
        images[mu] = out.packed();
    }
    return Network(width, std::move(images));
}

Network Network::identity(std::size_t width)
{
    const std::size_t count = checked_state_count(width);
    std::vector<std::uint32_t> images(count);
    for (std::size_t mu = 0; mu < count; ++mu) {
        images[mu] = static_cast<std::uint32_t>(mu);
    }
    return Network(width, std::move(images));
}

Network Network::constant(const State& value)
{
    return Network(value.width(), std::vector<std::uint32_t>(checked_state_count(value.width()), value.packed()));
}

bool Network::coordinate(std::size_t i, const State& mu) const
{
    require_width(*this, mu, "coordinate");
    return State(width_, images_[mu.packed()]).test(i);
}

std::vector<bool> Network::table(std::size_t i) const
{
    if (i == 0 || i > width_) {
        throw DomainError("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(width_));
    }
    std::vector<bool> out(images_.size());
    for (std::size_t mu = 0; mu < images_.size(); ++mu) {
        out[mu] = (images_[mu] >> (i - 1)) & 1u;
    }
    return out;
}

Network example_circuit()
{
    return Network::from_function(2, [](const State& mu) {
        const bool m1 = mu.test(1);
        const bool m2 = mu.test(2);
        return State(2).with(1, m1 || (!m1 && !m2)).with(2, !m1 || (m1 && !m2));
    });
}

State apply_full(const Network& net, const State& mu)
{
    require_width(net, mu, "apply_full");
    return State(net.width(), net.image(mu.packed()));
}

State apply_masked(const Network& net, const State& lambda, const State& mu)
{
    require_width(net, mu, "apply_masked");
    require_width(net, lambda, "apply_masked");
    return State(net.width(), step_packed(net, lambda.packed(), mu.packed()));
}

State apply_word(const Network& net, std::span<const State> word, const State& mu)
{
    require_width(net, mu, "apply_word");
    std::uint32_t current = mu.packed();
    for (const State& lambda : word) {
        require_width(net, lambda, "apply_word");
        current = step_packed(net, lambda.packed(), current);
    }
    return State(net.width(), current);
}

} // namespace asyncflow
