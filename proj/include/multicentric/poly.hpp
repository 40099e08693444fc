#ifndef MULTICENTRIC_POLY_HPP
#define MULTICENTRIC_POLY_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "multicentric/errors.hpp"

namespace multicentric {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Ordered set of pairwise-distinct centers lambda_1, ..., lambda_d.
class RootSet {
public:
    RootSet(std::vector<Complex> roots, double separation_tolerance);

    Index size() const { return static_cast<Index>(roots_.size()); }
    const std::vector<Complex>& roots() const { return roots_; }
    Complex operator[](Index j) const { return roots_.at(static_cast<std::size_t>(j)); }
    double separation_tolerance() const { return tol_; }
    /// max pairwise distance between roots (0 for a single root)
    double diameter() const;

private:
    std::vector<Complex> roots_;
    double tol_;
};

/// make_root_set with an explicit tolerance.
RootSet make_root_set(const std::vector<Complex>& roots, double tol);
/// Default tolerance: 1e-9 relative to the root-set diameter.
RootSet make_root_set(const std::vector<Complex>& roots);

/// p(z) = prod_j (z - lambda_j), kept in product form.  Monic by construction.
class MonicPolynomial {
public:
    explicit MonicPolynomial(RootSet roots) : roots_(std::move(roots)) {}

    Index degree() const { return roots_.size(); }
    const RootSet& root_set() const { return roots_; }
    Complex root(Index j) const { return roots_[j]; }

    /// Evaluation via the product form; exactly zero at a stored root.
    Complex eval(Complex z) const;

    /// p'(lambda_l) = prod_{j != l} (lambda_l - lambda_j).
    Complex derivative_at_root(Index l) const;

    /// Monic coefficient vector, ascending powers, length degree()+1.
    Vector coefficients() const;

private:
    RootSet roots_;
};

/// sigma_{jl} = 1 / (p'(lambda_l) (lambda_j - lambda_l)), zero diagonal.
struct SigmaTable {
    Matrix entries; // d x d
};

/// L_{jl} = 1/(lambda_j - lambda_l) (zero diagonal), l_m = 1/p'(lambda_m).
struct CouplingData {
    Matrix L;
    Vector l_vec;
};

/// Lagrange basis at the roots: delta_j(z) = prod_{l != j}(z - lambda_l) / p'(lambda_j).
Vector delta_basis(const MonicPolynomial& p, Complex z);

SigmaTable sigma_table(const MonicPolynomial& p);
CouplingData coupling(const MonicPolynomial& p);

/// {p(c) : p'(c) = 0}, via companion-matrix eigenvalues of p'.
/// Empty for degree 1.
std::vector<Complex> critical_values(const MonicPolynomial& p);

// -- coefficient-level helpers (ascending-power vectors) ------------------

/// Expand prod_j (z - roots[j]) into monic coefficients by convolution.
Vector expand_from_roots(const std::vector<Complex>& roots);

/// Coefficients of the derivative.
Vector differentiate(const Vector& coeffs);

/// Multiply two coefficient vectors (convolution).
Vector poly_mul(const Vector& a, const Vector& b);

/// Divide a by monic b: a = q*b + r with deg r < deg b.
void poly_divmod(const Vector& a, const Vector& b, Vector& q, Vector& r);

Complex poly_eval(const Vector& coeffs, Complex z);

/// Roots of an arbitrary polynomial (leading coefficient need not be 1)
/// as eigenvalues of the companion matrix of the normalized polynomial.
std::vector<Complex> poly_roots(const Vector& coeffs);

} // namespace multicentric

#endif
