#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace asyncflow {

// A point of B^n, n in [1, 20]. The same type carries masks (which
// coordinates are computed) and the values of a computation function.
//
// Coordinates are 1-based. Coordinate i is stored in bit i-1 of the packed
// word, and the textual form lists coordinate 1 first: State::parse("10")
// has coordinate 1 set.
class State {
public:
    static constexpr std::size_t max_width = 20;

    // All-zero state of the given width.
    explicit State(std::size_t width);
    State(std::size_t width, std::uint32_t packed);

    static State zeros(std::size_t width) { return State(width); }
    static State ones(std::size_t width);
    // Accepts exactly `width` characters from {0,1}.
    static State parse(std::string_view bits);

    std::size_t width() const noexcept { return width_; }
    std::uint32_t packed() const noexcept { return bits_; }

    bool test(std::size_t i) const;
    State with(std::size_t i, bool value) const;

    bool none() const noexcept { return bits_ == 0; }
    bool all() const noexcept { return bits_ == full_mask(width_); }

    State operator~() const { return State(width_, ~bits_ & full_mask(width_)); }
    State operator&(const State& other) const;
    State operator|(const State& other) const;
    State operator^(const State& other) const;

    std::string to_string() const;

    friend bool operator==(const State&, const State&) = default;
    // Orders by width, then by the textual (coordinate 1 first) reading.
    friend std::strong_ordering operator<=>(const State& a, const State& b);

    static constexpr std::uint32_t full_mask(std::size_t width) noexcept
    {
        return width >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << width) - 1);
    }

private:
    std::uint8_t width_;
    std::uint32_t bits_;
};

// Throws DimensionError unless the widths agree.
void require_same_width(const State& a, const State& b, std::string_view context);

} // namespace asyncflow

template <>
struct std::hash<asyncflow::State> {
    std::size_t operator()(const asyncflow::State& s) const noexcept
    {
        return (static_cast<std::size_t>(s.width()) << 32) ^ s.packed();
    }
};
