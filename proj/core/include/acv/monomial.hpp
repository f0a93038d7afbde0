#pragma once

#include <cstdint>
#include <vector>

namespace acv {

/// Exponent vector over a fixed ambient variable list.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}

  std::size_t nvars() const { return e.size(); }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  friend bool operator==(const Monomial &a, const Monomial &b) {
    return a.e == b.e;
  }
};

bool divides(const Monomial &a, const Monomial &b);   // a | b
Monomial mono_mul(const Monomial &a, const Monomial &b);
Monomial mono_div(const Monomial &a, const Monomial &b); // a / b, requires b | a
Monomial mono_lcm(const Monomial &a, const Monomial &b);
bool mono_coprime(const Monomial &a, const Monomial &b);

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace acv
