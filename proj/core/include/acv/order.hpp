#pragma once

#include <vector>

#include "acv/monomial.hpp"

namespace acv {

/// Monomial order on a fixed number of variables.
///
/// Kinds:
///  - Grevlex / Lex over an optional significance sequence of variables
///    (most significant first; defaults to 0,1,...,n-1).
///  - Block: grevlex on a front block of variables, ties broken by grevlex
///    on the rest. Any monomial containing a front variable ranks above any
///    monomial free of them, which is all an elimination order needs.
class MonomialOrder {
public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  /// Grevlex / Lex with explicit significance sequence (a permutation of
  /// 0..n-1, most significant variable first).
  static MonomialOrder grevlex_seq(std::vector<std::size_t> seq);
  static MonomialOrder lex_seq(std::vector<std::size_t> seq);
  /// Elimination order with `front` ranked above everything else.
  static MonomialOrder block(std::size_t nvars, std::vector<std::size_t> front);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<std::size_t> &front() const { return front_; }

  /// Strictly-greater comparison: true iff a > b.
  bool greater(const Monomial &a, const Monomial &b) const;
  int compare(const Monomial &a, const Monomial &b) const; // -1, 0, +1

private:
  Kind kind_ = Kind::Grevlex;
  std::size_t nvars_ = 0;
  std::vector<std::size_t> seq_;       // significance order, most significant first
  std::vector<std::size_t> front_;     // block front variables
  std::vector<char> in_front_; // membership mask for front_
  std::vector<std::size_t> back_;      // complement of front_

  static int cmp_grevlex(const Monomial &a, const Monomial &b,
                         const std::vector<std::size_t> &seq);
  static int cmp_lex(const Monomial &a, const Monomial &b,
                     const std::vector<std::size_t> &seq);
};

} // namespace acv
