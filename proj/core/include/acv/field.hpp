#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace acv {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation receives structurally invalid input
/// (dimension mismatch, unknown variable, index out of range, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of a prime field Z/p with a word-sized prime p < 2^31.
/// The modulus travels with the value, so elements are plain values
/// and safe to share. Mixing moduli is a programming error.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) : v(value % modulus), p(modulus) {}

  bool is_zero() const { return v == 0; }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint32_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return raw(s, a.p);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    std::uint32_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return raw(s, a.p);
  }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return raw(static_cast<std::uint32_t>(
                   (static_cast<std::uint64_t>(a.v) * b.v) % a.p),
               a.p);
  }
  friend Fp operator-(Fp a) { return raw(a.v == 0 ? 0 : a.p - a.v, a.p); }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }

  Fp inv() const;
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  Fp &operator+=(Fp b) { return *this = *this + b; }
  Fp &operator-=(Fp b) { return *this = *this - b; }
  Fp &operator*=(Fp b) { return *this = *this * b; }

private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp x;
    x.v = v;
    x.p = p;
    return x;
  }
  static void check(Fp a, Fp b) {
    if (a.p != b.p) throw DomainError("prime field modulus mismatch");
  }
};

inline bool is_zero(const Int &x) { return x == 0; }
inline bool is_zero(const Rat &x) { return x == 0; }
inline bool is_zero(const Fp &x) { return x.is_zero(); }

/// Field context over Q. Stateless; exists so generic code can mint
/// constants uniformly over Q and Z/p.
struct QField {
  using Elem = Rat;
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat neg_one() const { return Rat(-1); }
  Rat from_int(const Int &n) const { return Rat(n); }
  Rat from_rat(const Rat &q) const { return q; }
  Rat inv(const Rat &x) const { return Rat(1) / x; }
};

/// Field context over Z/p.
struct FpField {
  using Elem = Fp;
  std::uint32_t p;

  explicit FpField(std::uint32_t modulus) : p(modulus) {}
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp neg_one() const { return -one(); }
  Fp from_int(const Int &n) const;
  /// Reduces a rational mod p; throws DomainError when p divides the
  /// denominator.
  Fp from_rat(const Rat &q) const;
  Fp inv(const Fp &x) const { return x.inv(); }
};

std::string to_string(const Rat &x);
std::string to_string(const Fp &x);

} // namespace acv
