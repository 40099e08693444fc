#ifndef MULTICENTRIC_MATRIX_CALCULUS_HPP
#define MULTICENTRIC_MATRIX_CALCULUS_HPP

#include "multicentric/function_space.hpp"
#include "multicentric/gelfand.hpp"
#include "multicentric/poly.hpp"

namespace multicentric {

struct EigenDecomposition {
    Matrix T;      // eigenvectors
    Vector D;      // eigenvalues
    double cond_T; // condition number of T
};

struct SimultaneousDiagonalization {
    Matrix S;
    Vector D1, D2; // A = S diag(D1) S^-1, B = S diag(D2) S^-1
};

struct CommuteCheck {
    bool commute;
    double residual; // ||AB - BA||_F
};

CommuteCheck check_commute(const Matrix& a, const Matrix& b, double tol = 1e-10);

/// Throws Defective when the eigenvector matrix condition exceeds the
/// threshold (the numerical stand-in for "not diagonalizable").
EigenDecomposition eig_diagonalize(const Matrix& a, double cond_threshold = 1e8);

bool verify_diagonalizable(const Matrix& a, double cond_threshold = 1e8);

/// Common eigenbasis for a commuting diagonalizable pair, found by
/// diagonalizing a random unit combination mu A + nu B (up to 5 retries).
SimultaneousDiagonalization simultaneous_diagonalize(const Matrix& a, const Matrix& b,
                                                     double tol = 1e-10);

/// phi(A) for phi = L f through the eigenvalue path: diagonalize, apply
/// the multicentric representation at each eigenvalue, conjugate back.
Matrix calc_single_eig(const VectorFunction1D& f, const MonicPolynomial& p, const Matrix& a,
                       double cond_threshold = 1e8);

/// All-matrix path: phi(A) = sum_j delta_j(A) f_j(p(A)), Horner on
/// matrices.  Holomorphic components only.
Matrix calc_single_matrix(const VectorFunction1D& f, const MonicPolynomial& p,
                          const Matrix& a);

/// Dispatcher: eigenvalue path when A is diagonalizable, matrix path
/// otherwise (requires holomorphic f in that case).
Matrix calc_single(const VectorFunction1D& f, const MonicPolynomial& p, const Matrix& a,
                   double cond_threshold = 1e8);

/// phi(A,B) via simultaneous diagonalization and evaluation at the paired
/// eigenvalues.  Supports conjugate monomials.
Matrix calc_pair_eig(const PolyCoeffFunction& f, const MonicPolynomial& p1,
                     const MonicPolynomial& p2, const Matrix& a, const Matrix& b,
                     double commute_tol = 1e-10);

/// All-matrix path with bivariate Horner in the commuting arguments
/// p1(A), p2(B).  Holomorphic only.
Matrix calc_pair_matrix(const PolyCoeffFunction& f, const MonicPolynomial& p1,
                        const MonicPolynomial& p2, const Matrix& a, const Matrix& b,
                        double commute_tol = 1e-10);

Matrix calc_pair(const PolyCoeffFunction& f, const MonicPolynomial& p1,
                 const MonicPolynomial& p2, const Matrix& a, const Matrix& b,
                 double commute_tol = 1e-10);

/// Jordan-block-removing polynomial: p with distinct roots such that p(A)
/// is diagonalizable, built as the normalized antiderivative of
/// q(z) = prod_i (z - lambda_i)^{s_i - 1} shifted by -c.
MonicPolynomial suggest_polynomial(const Matrix& a, Complex c);

/// Evaluate a coefficient polynomial at a matrix by Horner.
Matrix poly_eval_matrix(const Vector& coeffs, const Matrix& a);

} // namespace multicentric

#endif
