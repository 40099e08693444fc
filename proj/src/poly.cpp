#include "multicentric/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace multicentric {

RootSet::RootSet(std::vector<Complex> roots, double separation_tolerance)
    : roots_(std::move(roots)), tol_(separation_tolerance) {
    if (roots_.empty()) throw EmptyRoots("root set must be nonempty");
    if (tol_ < 0.0) throw ConfigError("separation tolerance must be nonnegative");
    const auto d = roots_.size();
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = j + 1; l < d; ++l)
            if (std::abs(roots_[j] - roots_[l]) <= tol_) {
                std::ostringstream os;
                os << "roots " << j << " and " << l << " closer than tolerance " << tol_;
                throw DuplicateRoots(os.str());
            }
}

double RootSet::diameter() const {
    double diam = 0.0;
    for (std::size_t j = 0; j < roots_.size(); ++j)
        for (std::size_t l = j + 1; l < roots_.size(); ++l)
            diam = std::max(diam, std::abs(roots_[j] - roots_[l]));
    return diam;
}

RootSet make_root_set(const std::vector<Complex>& roots, double tol) {
    return RootSet(roots, tol);
}

RootSet make_root_set(const std::vector<Complex>& roots) {
    double diam = 0.0;
    for (std::size_t j = 0; j < roots.size(); ++j)
        for (std::size_t l = j + 1; l < roots.size(); ++l)
            diam = std::max(diam, std::abs(roots[j] - roots[l]));
    return RootSet(roots, 1e-9 * diam);
}

Complex MonicPolynomial::eval(Complex z) const {
    Complex v(1.0, 0.0);
    for (Complex lambda : roots_.roots()) v *= z - lambda;
    return v;
}

Complex MonicPolynomial::derivative_at_root(Index l) const {
    if (l < 0 || l >= degree()) throw IndexOutOfRange("derivative_at_root: bad index");
    Complex v(1.0, 0.0);
    const Complex zl = roots_[l];
    for (Index j = 0; j < degree(); ++j)
        if (j != l) v *= zl - roots_[j];
    return v;
}

Vector MonicPolynomial::coefficients() const {
    return expand_from_roots(roots_.roots());
}

Vector delta_basis(const MonicPolynomial& p, Complex z) {
    const Index d = p.degree();
    Vector delta(d);
    for (Index j = 0; j < d; ++j) {
        Complex num(1.0, 0.0);
        for (Index l = 0; l < d; ++l)
            if (l != j) num *= z - p.root(l);
        delta(j) = num / p.derivative_at_root(j);
    }
    return delta;
}

SigmaTable sigma_table(const MonicPolynomial& p) {
    const Index d = p.degree();
    SigmaTable t;
    t.entries = Matrix::Zero(d, d);
    for (Index l = 0; l < d; ++l) {
        const Complex dp = p.derivative_at_root(l);
        for (Index j = 0; j < d; ++j)
            if (j != l) t.entries(j, l) = 1.0 / (dp * (p.root(j) - p.root(l)));
    }
    return t;
}

CouplingData coupling(const MonicPolynomial& p) {
    const Index d = p.degree();
    CouplingData c;
    c.L = Matrix::Zero(d, d);
    c.l_vec = Vector(d);
    for (Index j = 0; j < d; ++j) {
        c.l_vec(j) = 1.0 / p.derivative_at_root(j);
        for (Index l = 0; l < d; ++l)
            if (j != l) c.L(j, l) = 1.0 / (p.root(j) - p.root(l));
    }
    return c;
}

std::vector<Complex> critical_values(const MonicPolynomial& p) {
    if (p.degree() < 2) return {};
    const Vector dp = differentiate(p.coefficients());
    std::vector<Complex> points = poly_roots(dp);
    std::vector<Complex> values;
    values.reserve(points.size());
    for (Complex c : points) values.push_back(p.eval(c));
    return values;
}

Vector expand_from_roots(const std::vector<Complex>& roots) {
    Vector c = Vector::Zero(static_cast<Index>(roots.size()) + 1);
    c(0) = 1.0;
    Index deg = 0;
    for (Complex r : roots) {
        // multiply by (z - r)
        for (Index i = deg + 1; i > 0; --i) c(i) = c(i - 1) - r * c(i);
        c(0) *= -r;
        ++deg;
    }
    return c;
}

Vector differentiate(const Vector& coeffs) {
    if (coeffs.size() <= 1) return Vector::Zero(1);
    Vector d(coeffs.size() - 1);
    for (Index i = 1; i < coeffs.size(); ++i) d(i - 1) = double(i) * coeffs(i);
    return d;
}

Vector poly_mul(const Vector& a, const Vector& b) {
    Vector c = Vector::Zero(a.size() + b.size() - 1);
    for (Index i = 0; i < a.size(); ++i)
        for (Index j = 0; j < b.size(); ++j) c(i + j) += a(i) * b(j);
    return c;
}

void poly_divmod(const Vector& a, const Vector& b, Vector& q, Vector& r) {
    const Index db = b.size() - 1;
    if (db < 0 || std::abs(b(db)) == 0.0) throw ConfigError("poly_divmod: zero divisor");
    Vector rem = a;
    const Index da = a.size() - 1;
    if (da < db) {
        q = Vector::Zero(1);
        r = a;
        return;
    }
    q = Vector::Zero(da - db + 1);
    for (Index i = da; i >= db; --i) {
        const Complex factor = rem(i) / b(db);
        q(i - db) = factor;
        for (Index j = 0; j <= db; ++j) rem(i - db + j) -= factor * b(j);
    }
    r = rem.head(std::max<Index>(db, 1));
}

Complex poly_eval(const Vector& coeffs, Complex z) {
    Complex v(0.0, 0.0);
    for (Index i = coeffs.size() - 1; i >= 0; --i) v = v * z + coeffs(i);
    return v;
}

std::vector<Complex> poly_roots(const Vector& coeffs) {
    // strip trailing (near-)zero leading coefficients
    Index deg = coeffs.size() - 1;
    const double scale = coeffs.cwiseAbs().maxCoeff();
    if (scale == 0.0) throw RootFindingFailed("poly_roots: zero polynomial");
    while (deg > 0 && std::abs(coeffs(deg)) <= 1e-14 * scale) --deg;
    if (deg == 0) return {};
    Matrix companion = Matrix::Zero(deg, deg);
    for (Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs(i) / coeffs(deg);
    Eigen::ComplexEigenSolver<Matrix> es(companion, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw RootFindingFailed("companion-matrix eigensolver did not converge");
    std::vector<Complex> roots(static_cast<std::size_t>(deg));
    for (Index i = 0; i < deg; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return roots;
}

} // namespace multicentric
