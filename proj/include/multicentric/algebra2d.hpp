#ifndef MULTICENTRIC_ALGEBRA2D_HPP
#define MULTICENTRIC_ALGEBRA2D_HPP

#include "multicentric/poly.hpp"

namespace multicentric {

// Two-variable polyproduct on C^{d1 x d2}, pointwise at fixed (w1, w2).
// The normative definition is the expanded scalar formula
// polyprod2_scalar; the boxing/tensor form polyprod2_matrix exists as a
// fidelity cross-check and the two must agree to 1e-12.

/// Boxing of column k: entry (i,j) = F(i,k) - F(j,k).
Matrix box_col(const Matrix& f, Index k);

/// Boxing of (the transpose of) row j: entry (k,m) = F(j,k) - F(j,m).
Matrix box_row(const Matrix& f, Index j);

/// Second-difference boxing: (d1*d2) x d2 matrix whose column k holds,
/// in blocks indexed by m (block m = k is zero), the entries
///   (F(j,k) - F(j,m)) - (F(i,k) - F(i,m)),  i = 0..d1-1.
/// Row layout: block m occupies rows [m*d1, (m+1)*d1).
Matrix box_double(const Matrix& f, Index j);

Matrix polyprod2_scalar(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                        Complex w2, const Matrix& f, const Matrix& g);

Matrix polyprod2_boxed(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                       Complex w2, const Matrix& f, const Matrix& g);

/// (e_{1,j} (x) e_{2,k}) (*) (e_{1,l} (x) e_{2,m}) as the outer product of
/// the one-variable basis products.
Matrix basis_product_2d(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                        Complex w2, Index j, Index k, Index l, Index m);

/// Flattened multiplication operator: M_F vec(G) = vec(F (*) G).
/// vec is column-major over (j,k) with j fastest: index = k*d1 + j.
Matrix mult_matrix2(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                    Complex w2, const Matrix& f);

/// Pointwise inverse: F (*) result = all-ones.
Matrix inverse_point2(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                      Complex w2, const Matrix& f, double cond_threshold = 1e12);

} // namespace multicentric

#endif
