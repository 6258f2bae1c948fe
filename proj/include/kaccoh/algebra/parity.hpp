#pragma once

#include <cstdint>
#include <string_view>

namespace kaccoh {

/// Z_2-degree of a homogeneous element.
enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept
{
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr int bit(Parity a) noexcept { return static_cast<int>(a); }

/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) noexcept
{
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

constexpr std::string_view to_string(Parity a) noexcept { return a == Parity::even ? "even" : "odd"; }

} // namespace kaccoh
