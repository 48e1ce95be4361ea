#include "asyncflow/state.hpp"

#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

void check_width(std::size_t width)
{
    if (width == 0 || width > State::max_width) {
        throw CapacityError("state width " + std::to_string(width) + " outside [1, " +
                            std::to_string(State::max_width) + "]");
    }
}

// Coordinate 1 becomes the most significant bit.
std::uint32_t textual_key(const State& s)
{
    std::uint32_t key = 0;
    for (std::size_t i = 0; i < s.width(); ++i) {
        key = (key << 1) | ((s.packed() >> i) & 1u);
    }
    return key;
}

} // namespace

State::State(std::size_t width) : State(width, 0) {}

State::State(std::size_t width, std::uint32_t packed)
    : width_(static_cast<std::uint8_t>(width)), bits_(packed & full_mask(width))
{
    check_width(width);
}

State State::ones(std::size_t width)
{
    return State(width, full_mask(width));
}

State State::parse(std::string_view bits)
{
    if (bits.empty() || bits.size() > max_width) {
        throw ParseError("state literal '" + std::string(bits) + "' must have 1 to 20 bits");
    }
    std::uint32_t packed = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            packed |= std::uint32_t{1} << i;
        } else if (bits[i] != '0') {
            throw ParseError("state literal '" + std::string(bits) + "' contains a non-binary digit");
        }
    }
    return State(bits.size(), packed);
}

bool State::test(std::size_t i) const
{
    if (i == 0 || i > width_) {
        throw DomainError("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(width_));
    }
    return (bits_ >> (i - 1)) & 1u;
}

State State::with(std::size_t i, bool value) const
{
    test(i);
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    return State(width_, value ? (bits_ | bit) : (bits_ & ~bit));
}

State State::operator&(const State& other) const
{
    require_same_width(*this, other, "&");
    return State(width_, bits_ & other.bits_);
}

State State::operator|(const State& other) const
{
    require_same_width(*this, other, "|");
    return State(width_, bits_ | other.bits_);
}

State State::operator^(const State& other) const
{
    require_same_width(*this, other, "^");
    return State(width_, bits_ ^ other.bits_);
}

std::string State::to_string() const
{
    std::string out(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
        if ((bits_ >> i) & 1u) {
            out[i] = '1';
        }
    }
    return out;
}

std::strong_ordering operator<=>(const State& a, const State& b)
{
    if (auto c = a.width() <=> b.width(); c != 0) {
        return c;
    }
    return textual_key(a) <=> textual_key(b);
}

void require_same_width(const State& a, const State& b, std::string_view context)
{
    if (a.width() != b.width()) {
        throw DimensionError(std::string(context) + ": width " + std::to_string(a.width()) + " vs " +
                             std::to_string(b.width()));
    }
}

} // namespace asyncflow
