#pragma once

#include <cstdint>

namespace ppp {

/// Arithmetic in the prime field F_p, p = 2^61 - 1. Elements are stored
/// reduced in [0, p).
namespace fp61 {

inline constexpr std::uint64_t kP = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t reduce(std::uint64_t v) { return v >= kP ? v - kP : v; }

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  return reduce(a + b);
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kP - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 w = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(w & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(w >> 61);
  return reduce(lo + hi);
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  while (exp) {
    if (exp & 1) acc = mul(acc, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return acc;
}

inline std::uint64_t inv(std::uint64_t a) { return pow(a, kP - 2); }

}  // namespace fp61
}  // namespace ppp
