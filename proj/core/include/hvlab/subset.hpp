#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hvlab {

/// Hard limit imposed by the 64-bit word backing a Subset.
inline constexpr std::size_t kSubsetWordBits = 64;

/// Largest carrier accepted by validators. Defaults to 16; the
/// HVLAB_MAX_CARRIER environment variable overrides it (clamped to 64).
std::size_t max_carrier_size();

/// A subset of a finite carrier {0, ..., n-1}, stored as a bit mask.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

    static constexpr Subset singleton(std::size_t i) { return Subset{std::uint64_t{1} << i}; }
    static constexpr Subset full(std::size_t n)
    {
        return Subset{n >= kSubsetWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

    /// Index of the lowest member; undefined on the empty set.
    constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

    constexpr Subset operator|(Subset o) const { return Subset{bits_ | o.bits_}; }
    constexpr Subset operator&(Subset o) const { return Subset{bits_ & o.bits_}; }
    constexpr Subset& operator|=(Subset o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr Subset& operator&=(Subset o)
    {
        bits_ &= o.bits_;
        return *this;
    }

    constexpr auto operator<=>(const Subset&) const = default;

    template <class F>
    constexpr void for_each(F&& f) const
    {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
            f(static_cast<std::size_t>(std::countr_zero(rest)));
        }
    }

    std::vector<std::size_t> elements() const
    {
        std::vector<std::size_t> out;
        out.reserve(size());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

} // namespace hvlab

template <>
struct std::hash<hvlab::Subset> {
    std::size_t operator()(hvlab::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
