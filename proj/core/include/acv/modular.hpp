#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acv/polynomial.hpp"

namespace acv {

/// First `count` primes walking downward from 2^31 − 1.
std::vector<std::uint32_t> word_primes(std::size_t count);

/// Next word prime strictly below `below`.
std::uint32_t next_word_prime_below(std::uint32_t below);

/// Coefficientwise Chinese remaindering of per-prime images; monomial
/// supports are unified, missing coefficients read as 0. Returns the
/// combined polynomial with coefficients in [0, M) and sets `modulus` = M.
Poly<Int> crt_combine(
    const std::vector<std::pair<Poly<Fp>, std::uint32_t>> &residues,
    Int &modulus);

/// Wang reconstruction: n/d with |n|, d ≤ √(m/2), gcd(d, m) = 1 and
/// n ≡ a·d (mod m), or nothing when no such pair exists.
std::optional<Rat> rational_reconstruct(const Int &a, const Int &m);

/// Coefficientwise reconstruction; fails if any coefficient does.
std::optional<Poly<Rat>> rational_reconstruct(const Poly<Int> &f,
                                              const Int &m);

} // namespace acv
