#include "multicentric/algebra2d.hpp"

#include <Eigen/SVD>

#include "multicentric/algebra1d.hpp"

namespace multicentric {

namespace {

void require_shape(const MonicPolynomial& p1, const MonicPolynomial& p2, const Matrix& f,
                   const char* who) {
    if (f.rows() != p1.degree() || f.cols() != p2.degree())
        throw DimensionMismatch(std::string(who) + ": matrix shape does not match degrees");
}

} // namespace

Matrix box_col(const Matrix& f, Index k) {
    if (k < 0 || k >= f.cols()) throw IndexOutOfRange("box_col: bad column index");
    return box(f.col(k));
}

Matrix box_row(const Matrix& f, Index j) {
    if (j < 0 || j >= f.rows()) throw IndexOutOfRange("box_row: bad row index");
    return box(f.row(j).transpose());
}

Matrix box_double(const Matrix& f, Index j) {
    if (j < 0 || j >= f.rows()) throw IndexOutOfRange("box_double: bad row index");
    const Index d1 = f.rows(), d2 = f.cols();
    Matrix out = Matrix::Zero(d1 * d2, d2);
    for (Index k = 0; k < d2; ++k)
        for (Index m = 0; m < d2; ++m) {
            if (m == k) continue; // zero block
            for (Index i = 0; i < d1; ++i)
                out(m * d1 + i, k) = (f(j, k) - f(j, m)) - (f(i, k) - f(i, m));
        }
    return out;
}

Matrix polyprod2_scalar(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                        Complex w2, const Matrix& f, const Matrix& g) {
    require_shape(p1, p2, f, "polyprod2_scalar");
    require_shape(p1, p2, g, "polyprod2_scalar");
    const Index d1 = p1.degree(), d2 = p2.degree();
    const SigmaTable s1 = sigma_table(p1);
    const SigmaTable s2 = sigma_table(p2);
    Matrix out(d1, d2);
    for (Index j = 0; j < d1; ++j)
        for (Index k = 0; k < d2; ++k) {
            Complex acc = f(j, k) * g(j, k);
            for (Index l = 0; l < d1; ++l)
                if (l != j)
                    acc -= w1 * s1.entries(j, l) *
                           ((f(j, k) - f(l, k)) * (g(j, k) - g(l, k)));
            for (Index m = 0; m < d2; ++m)
                if (m != k)
                    acc -= w2 * s2.entries(k, m) *
                           ((f(j, k) - f(j, m)) * (g(j, k) - g(j, m)));
            for (Index l = 0; l < d1; ++l) {
                if (l == j) continue;
                for (Index m = 0; m < d2; ++m) {
                    if (m == k) continue;
                    const Complex df = (f(j, k) - f(j, m)) - (f(l, k) - f(l, m));
                    const Complex dg = (g(j, k) - g(j, m)) - (g(l, k) - g(l, m));
                    acc += w1 * w2 * s1.entries(j, l) * s2.entries(k, m) * (df * dg);
                }
            }
            out(j, k) = acc;
        }
    return out;
}

Matrix polyprod2_boxed(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                       Complex w2, const Matrix& f, const Matrix& g) {
    require_shape(p1, p2, f, "polyprod2_boxed");
    require_shape(p1, p2, g, "polyprod2_boxed");
    const Index d1 = p1.degree(), d2 = p2.degree();
    const CouplingData c1 = coupling(p1);
    const CouplingData c2 = coupling(p2);
    Matrix out = f.cwiseProduct(g);
    for (Index j = 0; j < d1; ++j) {
        const Matrix bdf = box_double(f, j);
        const Matrix bdg = box_double(g, j);
        const Matrix rowf = box_row(f, j);
        const Matrix rowg = box_row(g, j);
        // w2 term: k-th entry of l2^T (L2^T o row-box(f) o row-box(g))
        const Eigen::RowVectorXcd rowterm =
            c2.l_vec.transpose() *
            (c2.L.transpose().cwiseProduct(rowf).cwiseProduct(rowg));
        for (Index k = 0; k < d2; ++k) {
            // w1 term: j-th entry of (L1 o col-box(f) o col-box(g)) l1
            const Matrix colf = box_col(f, k);
            const Matrix colg = box_col(g, k);
            const Complex colterm =
                (c1.L.cwiseProduct(colf).cwiseProduct(colg) * c1.l_vec)(j);
            // w1 w2 term: (l2 (x) l1)-weighted contraction of column k of
            // the double boxings against (L2, row j of L1)
            Complex cross(0.0, 0.0);
            for (Index m = 0; m < d2; ++m) {
                if (m == k) continue;
                for (Index i = 0; i < d1; ++i) {
                    if (i == j) continue;
                    cross += c2.l_vec(m) * c1.l_vec(i) * c2.L(k, m) * c1.L(j, i) *
                             bdf(m * d1 + i, k) * bdg(m * d1 + i, k);
                }
            }
            out(j, k) += -w1 * colterm - w2 * rowterm(k) + w1 * w2 * cross;
        }
    }
    return out;
}

Matrix basis_product_2d(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                        Complex w2, Index j, Index k, Index l, Index m) {
    const Vector u = basis_product_1d(p1, w1, j, l);
    const Vector v = basis_product_1d(p2, w2, k, m);
    return u * v.transpose();
}

Matrix mult_matrix2(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                    Complex w2, const Matrix& f) {
    require_shape(p1, p2, f, "mult_matrix2");
    const Index d1 = p1.degree(), d2 = p2.degree();
    const Index n = d1 * d2;
    Matrix m(n, n);
    Matrix indicator = Matrix::Zero(d1, d2);
    for (Index k = 0; k < d2; ++k)
        for (Index j = 0; j < d1; ++j) {
            indicator(j, k) = 1.0;
            const Matrix col = polyprod2_scalar(p1, p2, w1, w2, f, indicator);
            indicator(j, k) = 0.0;
            m.col(k * d1 + j) = col.reshaped();
        }
    return m;
}

Matrix inverse_point2(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex w1,
                      Complex w2, const Matrix& f, double cond_threshold) {
    const Matrix m = mult_matrix2(p1, p2, w1, w2, f);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0 || sv(0) / smin > cond_threshold)
        throw NotInvertible("inverse_point2: multiplication operator is singular");
    const Vector x = svd.solve(Vector::Ones(m.rows()));
    return x.reshaped(p1.degree(), p2.degree());
}

} // namespace multicentric
