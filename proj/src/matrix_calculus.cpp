#include "multicentric/matrix_calculus.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace multicentric {

namespace {

void require_square_same(const Matrix& a, const Matrix& b, const char* who) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DimensionMismatch(std::string(who) + ": need square matrices of equal size");
}

double cond_estimate(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

Index svd_rank(const Matrix& m, double cutoff) {
    Eigen::JacobiSVD<Matrix> svd(m);
    Index rank = 0;
    for (Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > cutoff) ++rank;
    return rank;
}

} // namespace

CommuteCheck check_commute(const Matrix& a, const Matrix& b, double tol) {
    require_square_same(a, b, "check_commute");
    const double residual = (a * b - b * a).norm();
    return CommuteCheck{residual <= tol * a.norm() * b.norm() || residual == 0.0, residual};
}

EigenDecomposition eig_diagonalize(const Matrix& a, double cond_threshold) {
    if (a.rows() != a.cols()) throw DimensionMismatch("eig_diagonalize: matrix not square");
    Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw RootFindingFailed("eig_diagonalize: eigensolver did not converge");
    EigenDecomposition dec;
    dec.T = es.eigenvectors();
    dec.D = es.eigenvalues();
    dec.cond_T = cond_estimate(dec.T);
    if (!(dec.cond_T <= cond_threshold))
        throw Defective("eig_diagonalize: eigenvector matrix condition exceeds threshold");
    return dec;
}

bool verify_diagonalizable(const Matrix& a, double cond_threshold) {
    try {
        eig_diagonalize(a, cond_threshold);
        return true;
    } catch (const NumericalError&) {
        return false;
    }
}

SimultaneousDiagonalization simultaneous_diagonalize(const Matrix& a, const Matrix& b,
                                                     double tol) {
    require_square_same(a, b, "simultaneous_diagonalize");
    const CommuteCheck cc = check_commute(a, b, tol);
    if (!cc.commute)
        throw NotCommuting("simultaneous_diagonalize: commutator residual " +
                           std::to_string(cc.residual));
    if (!verify_diagonalizable(a) || !verify_diagonalizable(b))
        throw Defective("simultaneous_diagonalize: one factor is not diagonalizable");

    const Index n = a.rows();
    const double scale = a.norm() + b.norm();
    std::mt19937_64 rng(0x7a11c0de);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int attempt = 0; attempt < 5; ++attempt) {
        const double t1 = angle(rng), t2 = angle(rng);
        const Complex mu(std::cos(t1), std::sin(t1));
        const Complex nu(std::cos(t2), std::sin(t2));
        Eigen::ComplexEigenSolver<Matrix> es(mu * a + nu * b, true);
        if (es.info() != Eigen::Success) continue;
        const Matrix s = es.eigenvectors();
        Eigen::PartialPivLU<Matrix> lu(s);
        const Matrix da = lu.solve(a * s);
        const Matrix db = lu.solve(b * s);
        SimultaneousDiagonalization out;
        out.S = s;
        out.D1 = da.diagonal();
        out.D2 = db.diagonal();
        const double res1 = (a * s - s * out.D1.asDiagonal().toDenseMatrix()).norm();
        const double res2 = (b * s - s * out.D2.asDiagonal().toDenseMatrix()).norm();
        if (res1 + res2 <= 1e-7 * (scale == 0.0 ? 1.0 : scale)) return out;
    }
    throw RandomCombinationFailed(
        "simultaneous_diagonalize: no random combination produced a shared eigenbasis");
}

Matrix calc_single_eig(const VectorFunction1D& f, const MonicPolynomial& p, const Matrix& a,
                       double cond_threshold) {
    if (f.degree() != p.degree())
        throw DimensionMismatch("calc_single_eig: element length does not match degree");
    const EigenDecomposition dec = eig_diagonalize(a, cond_threshold);
    Vector phi(dec.D.size());
    for (Index i = 0; i < dec.D.size(); ++i) {
        const Complex z = dec.D(i);
        const Complex w = p.eval(z);
        const Vector delta = delta_basis(p, z);
        Complex acc(0.0, 0.0);
        for (Index j = 0; j < p.degree(); ++j) acc += delta(j) * f.eval(j, w);
        phi(i) = acc;
    }
    return dec.T * phi.asDiagonal() * dec.T.inverse();
}

Matrix poly_eval_matrix(const Vector& coeffs, const Matrix& a) {
    const Index n = a.rows();
    Matrix x = Matrix::Zero(n, n);
    for (Index i = coeffs.size() - 1; i >= 0; --i) {
        x = x * a;
        x.diagonal().array() += coeffs(i);
    }
    return x;
}

Matrix calc_single_matrix(const VectorFunction1D& f, const MonicPolynomial& p,
                          const Matrix& a) {
    if (f.degree() != p.degree())
        throw DimensionMismatch("calc_single_matrix: element length does not match degree");
    if (!f.holomorphic())
        throw ConjugateNotSupported(
            "calc_single_matrix: conjugate monomials need the eigenvalue path");
    const Index n = a.rows();
    const Index d = p.degree();
    // W = p(A) in product form
    Matrix w = Matrix::Identity(n, n);
    for (Index l = 0; l < d; ++l) {
        Matrix shifted = a;
        shifted.diagonal().array() -= p.root(l);
        w = w * shifted;
    }
    Matrix result = Matrix::Zero(n, n);
    for (Index j = 0; j < d; ++j) {
        Matrix delta_j = Matrix::Identity(n, n);
        for (Index l = 0; l < d; ++l) {
            if (l == j) continue;
            Matrix shifted = a;
            shifted.diagonal().array() -= p.root(l);
            delta_j = delta_j * shifted;
        }
        delta_j /= p.derivative_at_root(j);
        result += delta_j * poly_eval_matrix(f.coeff[static_cast<std::size_t>(j)].col(0), w);
    }
    return result;
}

Matrix calc_single(const VectorFunction1D& f, const MonicPolynomial& p, const Matrix& a,
                   double cond_threshold) {
    if (verify_diagonalizable(a, cond_threshold)) return calc_single_eig(f, p, a, cond_threshold);
    return calc_single_matrix(f, p, a);
}

Matrix calc_pair_eig(const PolyCoeffFunction& f, const MonicPolynomial& p1,
                     const MonicPolynomial& p2, const Matrix& a, const Matrix& b,
                     double commute_tol) {
    if (f.d1() != p1.degree() || f.d2() != p2.degree())
        throw DimensionMismatch("calc_pair_eig: element shape does not match degrees");
    const SimultaneousDiagonalization sd = simultaneous_diagonalize(a, b, commute_tol);
    const Element elem = f;
    Vector phi(sd.D1.size());
    for (Index i = 0; i < sd.D1.size(); ++i)
        phi(i) = multicentric_eval(elem, p1, p2, sd.D1(i), sd.D2(i));
    return sd.S * phi.asDiagonal() * sd.S.inverse();
}

Matrix calc_pair_matrix(const PolyCoeffFunction& f, const MonicPolynomial& p1,
                        const MonicPolynomial& p2, const Matrix& a, const Matrix& b,
                        double commute_tol) {
    if (f.d1() != p1.degree() || f.d2() != p2.degree())
        throw DimensionMismatch("calc_pair_matrix: element shape does not match degrees");
    if (!f.holomorphic())
        throw ConjugateNotSupported(
            "calc_pair_matrix: conjugate monomials need the eigenvalue path");
    const CommuteCheck cc = check_commute(a, b, commute_tol);
    if (!cc.commute)
        throw NotCommuting("calc_pair_matrix: commutator residual " +
                           std::to_string(cc.residual));
    const Index n = a.rows();
    const Index d1 = p1.degree(), d2 = p2.degree();
    // powers of W1 = p1(A), W2 = p2(B)
    const Matrix w1m = poly_eval_matrix(p1.coefficients(), a);
    const Matrix w2m = poly_eval_matrix(p2.coefficients(), b);
    std::vector<Matrix> pw1(static_cast<std::size_t>(f.max_degree1()) + 1);
    std::vector<Matrix> pw2(static_cast<std::size_t>(f.max_degree2()) + 1);
    pw1[0] = Matrix::Identity(n, n);
    pw2[0] = Matrix::Identity(n, n);
    for (std::size_t i = 1; i < pw1.size(); ++i) pw1[i] = pw1[i - 1] * w1m;
    for (std::size_t i = 1; i < pw2.size(); ++i) pw2[i] = pw2[i - 1] * w2m;

    const auto lagrange_at = [n](const MonicPolynomial& p, Index j, const Matrix& m) {
        Matrix out = Matrix::Identity(n, n);
        for (Index l = 0; l < p.degree(); ++l) {
            if (l == j) continue;
            Matrix shifted = m;
            shifted.diagonal().array() -= p.root(l);
            out = out * shifted;
        }
        return Matrix(out / p.derivative_at_root(j));
    };

    Matrix result = Matrix::Zero(n, n);
    for (Index j = 0; j < d1; ++j) {
        const Matrix delta1 = lagrange_at(p1, j, a);
        for (Index k = 0; k < d2; ++k) {
            const Matrix delta2 = lagrange_at(p2, k, b);
            Matrix fjk = Matrix::Zero(n, n);
            for (Index m = 0; m <= f.max_degree1(); ++m)
                for (Index q = 0; q <= f.max_degree2(); ++q) {
                    const Complex coef = f.at(j, k, m, 0, q, 0);
                    if (coef == Complex(0.0, 0.0)) continue;
                    fjk += coef * pw1[static_cast<std::size_t>(m)] *
                           pw2[static_cast<std::size_t>(q)];
                }
            result += delta1 * delta2 * fjk;
        }
    }
    return result;
}

Matrix calc_pair(const PolyCoeffFunction& f, const MonicPolynomial& p1,
                 const MonicPolynomial& p2, const Matrix& a, const Matrix& b,
                 double commute_tol) {
    const CommuteCheck cc = check_commute(a, b, commute_tol);
    if (!cc.commute)
        throw NotCommuting("calc_pair: commutator residual " + std::to_string(cc.residual));
    if (verify_diagonalizable(a) && verify_diagonalizable(b))
        return calc_pair_eig(f, p1, p2, a, b, commute_tol);
    return calc_pair_matrix(f, p1, p2, a, b, commute_tol);
}

namespace {

// Newton polishing; keeps exactly-representable roots exact.
Complex polish_root(const Vector& coeffs, Complex z) {
    const Vector dcoeffs = differentiate(coeffs);
    for (int it = 0; it < 3; ++it) {
        const Complex fz = poly_eval(coeffs, z);
        const Complex dz = poly_eval(dcoeffs, z);
        if (fz == Complex(0.0, 0.0) || dz == Complex(0.0, 0.0)) break;
        z -= fz / dz;
    }
    return z;
}

} // namespace

MonicPolynomial suggest_polynomial(const Matrix& a, Complex c) {
    if (a.rows() != a.cols()) throw DimensionMismatch("suggest_polynomial: matrix not square");
    if (c == Complex(0.0, 0.0)) throw ConfigError("suggest_polynomial: shift c must be nonzero");
    const Index n = a.rows();
    const double norm_a = a.norm();
    const double cluster_radius = 1e-6 * std::max(norm_a, 1e-300);
    const double rank_cutoff = 1e-8 * std::max(norm_a, 1e-300);

    Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw RootFindingFailed("suggest_polynomial: eigensolver did not converge");

    // cluster eigenvalues
    struct Cluster {
        Complex sum;
        Index count = 0;
        Complex center() const { return sum / double(count); }
    };
    std::vector<Cluster> clusters;
    for (Index i = 0; i < n; ++i) {
        const Complex lambda = es.eigenvalues()(i);
        bool placed = false;
        for (Cluster& cl : clusters)
            if (std::abs(lambda - cl.center()) <= cluster_radius) {
                cl.sum += lambda;
                ++cl.count;
                placed = true;
                break;
            }
        if (!placed) clusters.push_back(Cluster{lambda, 1});
    }

    // largest Jordan block per cluster via nullity growth of (A - lambda I)^k
    std::vector<Complex> q_roots;
    for (const Cluster& cl : clusters) {
        Matrix shifted = a;
        shifted.diagonal().array() -= cl.center();
        Matrix power = Matrix::Identity(n, n);
        Index prev_nullity = 0;
        Index s = 1;
        for (Index k = 1; k <= cl.count; ++k) {
            power = power * shifted;
            const Index nullity = n - svd_rank(power, rank_cutoff);
            if (nullity == prev_nullity) break;
            s = k;
            prev_nullity = nullity;
            if (nullity >= cl.count) break;
        }
        for (Index i = 1; i < s; ++i) q_roots.push_back(cl.center());
    }

    Complex shift = c;
    for (int attempt = 0; attempt < 5; ++attempt) {
        const Vector q = expand_from_roots(q_roots);
        const Index m = q.size() - 1;
        // p = (m+1) * antiderivative(q) - shift, monic of degree m+1
        Vector pc = Vector::Zero(m + 2);
        for (Index i = 0; i <= m; ++i) pc(i + 1) = double(m + 1) * q(i) / double(i + 1);
        pc(0) = -shift;
        std::vector<Complex> roots = poly_roots(pc);
        for (Complex& r : roots) r = polish_root(pc, r);
        try {
            MonicPolynomial p{make_root_set(roots)};
            if (verify_diagonalizable(poly_eval_matrix(pc, a))) return p;
        } catch (const ValidationError&) {
            // coincident roots; rescale the shift and retry
        }
        shift *= Complex(1.8, 0.6);
    }
    throw ConstructionFailed("suggest_polynomial: no admissible shift after retries");
}

} // namespace multicentric
