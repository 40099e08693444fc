#ifndef MULTICENTRIC_ALGEBRA1D_HPP
#define MULTICENTRIC_ALGEBRA1D_HPP

#include "multicentric/poly.hpp"

namespace multicentric {

// One-variable polyproduct on C^d, pointwise at a fixed w.
// The normative formula is the component-wise sigma form
//   (a (*) b)_j = a_j b_j - w sum_{l != j} sigma_{jl} (a_j - a_l)(b_j - b_l);
// the Hadamard/boxing form a o b - w (L o []a o []b) l is kept as an
// independent cross-check path.

/// Antisymmetric matrix of pairwise differences, entry (i,j) = a_i - a_j.
Matrix box(const Vector& a);

Vector polyprod_point(const MonicPolynomial& p, Complex w, const Vector& a, const Vector& b);

/// Boxing/Hadamard form of the same product (cross-check path).
Vector polyprod_point_boxed(const MonicPolynomial& p, Complex w, const Vector& a,
                            const Vector& b);

/// e_i (*) e_j evaluated through the closed basis formulas.
Vector basis_product_1d(const MonicPolynomial& p, Complex w, Index i, Index j);

/// Matrix M_a(w) with M_a(w) b = a (*) b for every b.
Matrix mult_matrix(const MonicPolynomial& p, Complex w, const Vector& a);

/// Inverse in the algebra: a (*) result = (1,...,1).  Throws NotInvertible
/// when the multiplication matrix is singular within the conditioning
/// threshold (default 1e12).
Vector inverse_point(const MonicPolynomial& p, Complex w, const Vector& a,
                     double cond_threshold = 1e12);

/// n-th polyproduct power by binary splitting; n = 0 gives the unit.
Vector power_point(const MonicPolynomial& p, Complex w, const Vector& a, long n);

} // namespace multicentric

#endif
