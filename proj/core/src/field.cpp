#include "acv/field.hpp"

namespace acv {

Fp Fp::inv() const {
  if (v == 0) throw DomainError("division by zero in prime field");
  // extended Euclid on (v, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = p, newr = v;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return Fp(static_cast<std::uint32_t>(t), p);
}

Fp FpField::from_int(const Int &n) const {
  Int r = n % Int(p);
  if (r < 0) r += p;
  return Fp(static_cast<std::uint32_t>(r.get_ui()), p);
}

Fp FpField::from_rat(const Rat &q) const {
  Fp num = from_int(q.get_num());
  Fp den = from_int(q.get_den());
  if (den.is_zero())
    throw DomainError("prime divides a coefficient denominator");
  return num / den;
}

std::string to_string(const Rat &x) {
  return x.get_str();
}

std::string to_string(const Fp &x) {
  return std::to_string(x.v);
}

} // namespace acv
