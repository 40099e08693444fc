#include "multicentric/algebra1d.hpp"

#include <Eigen/SVD>

namespace multicentric {

namespace {

void require_dim(const MonicPolynomial& p, const Vector& a, const char* who) {
    if (a.size() != p.degree())
        throw DimensionMismatch(std::string(who) + ": vector length does not match degree");
}

} // namespace

Matrix box(const Vector& a) {
    const Index d = a.size();
    Matrix m(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) m(i, j) = a(i) - a(j);
    return m;
}

Vector polyprod_point(const MonicPolynomial& p, Complex w, const Vector& a, const Vector& b) {
    require_dim(p, a, "polyprod_point");
    require_dim(p, b, "polyprod_point");
    const Index d = p.degree();
    const SigmaTable sigma = sigma_table(p);
    Vector out(d);
    for (Index j = 0; j < d; ++j) {
        Complex acc = a(j) * b(j);
        for (Index l = 0; l < d; ++l)
            if (l != j) acc -= w * sigma.entries(j, l) * ((a(j) - a(l)) * (b(j) - b(l)));
        out(j) = acc;
    }
    return out;
}

Vector polyprod_point_boxed(const MonicPolynomial& p, Complex w, const Vector& a,
                            const Vector& b) {
    require_dim(p, a, "polyprod_point_boxed");
    require_dim(p, b, "polyprod_point_boxed");
    const CouplingData c = coupling(p);
    const Matrix hadamard = c.L.cwiseProduct(box(a)).cwiseProduct(box(b));
    return a.cwiseProduct(b) - w * (hadamard * c.l_vec);
}

Vector basis_product_1d(const MonicPolynomial& p, Complex w, Index i, Index j) {
    const Index d = p.degree();
    if (i < 0 || i >= d || j < 0 || j >= d)
        throw IndexOutOfRange("basis_product_1d: bad basis index");
    const SigmaTable sigma = sigma_table(p);
    Vector out = Vector::Zero(d);
    if (i == j) {
        out(i) = 1.0;
        for (Index l = 0; l < d; ++l)
            if (l != i) {
                out(i) -= w * sigma.entries(i, l);
                out(l) -= w * sigma.entries(l, i);
            }
    } else {
        out(i) = w * sigma.entries(i, j);
        out(j) = w * sigma.entries(j, i);
    }
    return out;
}

Matrix mult_matrix(const MonicPolynomial& p, Complex w, const Vector& a) {
    require_dim(p, a, "mult_matrix");
    const Index d = p.degree();
    const SigmaTable sigma = sigma_table(p);
    Matrix m = Matrix::Zero(d, d);
    for (Index j = 0; j < d; ++j) {
        Complex diag = a(j);
        for (Index l = 0; l < d; ++l)
            if (l != j) {
                const Complex t = w * sigma.entries(j, l) * (a(j) - a(l));
                diag -= t;
                m(j, l) = t;
            }
        m(j, j) = diag;
    }
    return m;
}

Vector inverse_point(const MonicPolynomial& p, Complex w, const Vector& a,
                     double cond_threshold) {
    const Matrix m = mult_matrix(p, w, a);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0 || sv(0) / smin > cond_threshold)
        throw NotInvertible("inverse_point: multiplication matrix is singular");
    return svd.solve(Vector::Ones(p.degree()));
}

Vector power_point(const MonicPolynomial& p, Complex w, const Vector& a, long n) {
    if (n < 0) throw ConfigError("power_point: negative exponent");
    Vector result = Vector::Ones(p.degree());
    Vector base = a;
    while (n > 0) {
        if (n & 1) result = polyprod_point(p, w, result, base);
        n >>= 1;
        if (n > 0) base = polyprod_point(p, w, base, base);
    }
    return result;
}

} // namespace multicentric
