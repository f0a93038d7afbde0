#include "acv/matrix.hpp"

namespace acv {

template Poly<Rat> det_fraction_free<QField>(const QField &,
                                             const PolyMatrix<Rat> &);
template Poly<Fp> det_fraction_free<FpField>(const FpField &,
                                             const PolyMatrix<Fp> &);
template std::pair<std::vector<std::vector<Fraction<Rat>>>, Poly<Rat>>
kernel_basis_cramer<QField>(const QField &, const PolyMatrix<Rat> &,
                            std::size_t);
template std::pair<std::vector<std::vector<Fraction<Fp>>>, Poly<Fp>>
kernel_basis_cramer<FpField>(const FpField &, const PolyMatrix<Fp> &,
                             std::size_t);

} // namespace acv
