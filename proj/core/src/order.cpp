#include "acv/order.hpp"

#include <numeric>

#include "acv/field.hpp"

namespace acv {

static std::vector<std::size_t> identity_seq(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return grevlex_seq(identity_seq(nvars));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  return lex_seq(identity_seq(nvars));
}

MonomialOrder MonomialOrder::grevlex_seq(std::vector<std::size_t> seq) {
  MonomialOrder o;
  o.kind_ = Kind::Grevlex;
  o.nvars_ = seq.size();
  o.seq_ = std::move(seq);
  return o;
}

MonomialOrder MonomialOrder::lex_seq(std::vector<std::size_t> seq) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = seq.size();
  o.seq_ = std::move(seq);
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t nvars, std::vector<std::size_t> front) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.nvars_ = nvars;
  o.front_ = std::move(front);
  o.in_front_.assign(nvars, 0);
  for (std::size_t v : o.front_) o.in_front_[v] = 1;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!o.in_front_[v]) o.back_.push_back(v);
  return o;
}

int MonomialOrder::cmp_grevlex(const Monomial &a, const Monomial &b,
                               const std::vector<std::size_t> &seq) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t v : seq) {
    da += a.e[v];
    db += b.e[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp_lex(const Monomial &a, const Monomial &b,
                           const std::vector<std::size_t> &seq) {
  for (std::size_t v : seq) {
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_)
    throw DomainError("monomial arity does not match order");
  switch (kind_) {
  case Kind::Grevlex:
    return cmp_grevlex(a, b, seq_);
  case Kind::Lex:
    return cmp_lex(a, b, seq_);
  case Kind::Block: {
    int c = cmp_grevlex(a, b, front_);
    if (c) return c;
    return cmp_grevlex(a, b, back_);
  }
  }
  return 0;
}

bool MonomialOrder::greater(const Monomial &a, const Monomial &b) const {
  return compare(a, b) > 0;
}

} // namespace acv
