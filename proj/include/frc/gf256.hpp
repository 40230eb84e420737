#pragma once

// GF(2^8) with the primitive polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11d).

#include <array>
#include <cstdint>
#include <ostream>

#include "frc/error.hpp"

namespace frc {

namespace detail {

struct Gf256Tables {
  std::array<std::uint8_t, 512> exp{};
  std::array<std::uint8_t, 256> log{};
};

constexpr Gf256Tables make_gf256_tables() {
  Gf256Tables t;
  unsigned x = 1;
  for (unsigned i = 0; i < 255; ++i) {
    t.exp[i] = static_cast<std::uint8_t>(x);
    t.log[x] = static_cast<std::uint8_t>(i);
    x <<= 1;
    if (x & 0x100) x ^= 0x11d;
  }
  for (unsigned i = 255; i < 512; ++i) t.exp[i] = t.exp[i - 255];
  return t;
}

inline constexpr Gf256Tables kGf256 = make_gf256_tables();

}  // namespace detail

class Gf256 {
 public:
  static constexpr unsigned kOrder = 256;

  constexpr Gf256() = default;
  constexpr explicit Gf256(std::uint8_t v) : v_(v) {}

  constexpr std::uint8_t value() const noexcept { return v_; }

  friend constexpr Gf256 operator+(Gf256 a, Gf256 b) { return Gf256(a.v_ ^ b.v_); }
  friend constexpr Gf256 operator-(Gf256 a, Gf256 b) { return a + b; }

  friend constexpr Gf256 operator*(Gf256 a, Gf256 b) {
    if (a.v_ == 0 || b.v_ == 0) return Gf256();
    return Gf256(detail::kGf256.exp[detail::kGf256.log[a.v_] + detail::kGf256.log[b.v_]]);
  }

  Gf256 inverse() const {
    if (v_ == 0) throw Error("GF(256): zero has no inverse");
    return Gf256(detail::kGf256.exp[255 - detail::kGf256.log[v_]]);
  }

  friend Gf256 operator/(Gf256 a, Gf256 b) { return a * b.inverse(); }

  Gf256& operator+=(Gf256 o) { return *this = *this + o; }
  Gf256& operator*=(Gf256 o) { return *this = *this * o; }

  friend constexpr bool operator==(Gf256, Gf256) = default;
  friend std::ostream& operator<<(std::ostream& os, Gf256 a) { return os << static_cast<unsigned>(a.v_); }

 private:
  std::uint8_t v_ = 0;
};

}  // namespace frc
