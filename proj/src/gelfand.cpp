#include "multicentric/gelfand.hpp"

#include <cmath>

namespace multicentric {

Complex VectorFunction1D::eval(Index j, Complex w) const {
    if (j < 0 || j >= degree()) throw IndexOutOfRange("VectorFunction1D::eval: bad index");
    const Matrix& table = coeff[static_cast<std::size_t>(j)];
    const Complex cw = std::conj(w);
    Complex acc(0.0, 0.0);
    // Horner over a, direct powers over b (tables are small)
    for (Index b = 0; b < table.cols(); ++b) {
        Complex inner(0.0, 0.0);
        for (Index a = table.rows() - 1; a >= 0; --a) inner = inner * w + table(a, b);
        acc += inner * std::pow(cw, static_cast<double>(b));
    }
    return acc;
}

bool VectorFunction1D::holomorphic() const {
    for (const Matrix& table : coeff)
        for (Index a = 0; a < table.rows(); ++a)
            for (Index b = 1; b < table.cols(); ++b)
                if (table(a, b) != Complex(0.0, 0.0)) return false;
    return true;
}

VectorFunction1D VectorFunction1D::unit(Index d) {
    VectorFunction1D f;
    f.coeff.assign(static_cast<std::size_t>(d), Matrix::Constant(1, 1, Complex(1.0, 0.0)));
    return f;
}

Character make_character(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex z1,
                         Complex z2) {
    Character chi;
    chi.z1 = z1;
    chi.z2 = z2;
    chi.delta1 = delta_basis(p1, z1);
    chi.delta2 = delta_basis(p2, z2);
    chi.w1 = p1.eval(z1);
    chi.w2 = p2.eval(z2);
    return chi;
}

Complex multicentric_eval(const Element& f, const MonicPolynomial& p1,
                          const MonicPolynomial& p2, Complex z1, Complex z2) {
    return character_apply(make_character(p1, p2, z1, z2), f);
}

Complex character_apply(const Character& chi, const Element& f) {
    const Matrix values = eval_element(f, chi.w1, chi.w2);
    Complex acc(0.0, 0.0);
    for (Index j = 0; j < chi.delta1.size(); ++j)
        for (Index k = 0; k < chi.delta2.size(); ++k)
            acc += chi.delta1(j) * chi.delta2(k) * values(j, k);
    return acc;
}

namespace {

std::vector<PreimagePoint> factor_preimages(const MonicPolynomial& p,
                                            const FactorDomain& dom) {
    std::vector<PreimagePoint> out;
    const Vector coeffs = p.coefficients();
    for (std::size_t i = 0; i < dom.grid.size(); ++i) {
        Vector shifted = coeffs;
        shifted(0) -= dom.grid[i];
        for (Complex z : poly_roots(shifted))
            out.push_back(PreimagePoint{z, static_cast<Index>(i)});
    }
    return out;
}

} // namespace

PreimageGrid make_preimage_grid(const MonicPolynomial& p1, const MonicPolynomial& p2,
                                const DomainSpec& domain) {
    return PreimageGrid{factor_preimages(p1, domain.factor1),
                        factor_preimages(p2, domain.factor2)};
}

SpectrumSet gelfand_transform(const Element& f, const MonicPolynomial& p1,
                              const MonicPolynomial& p2, const DomainSpec& domain,
                              const PreimageGrid& grid) {
    SpectrumSet out;
    out.points.reserve(grid.k1.size() * grid.k2.size());
    for (const PreimagePoint& q1 : grid.k1) {
        const Vector delta1 = delta_basis(p1, q1.z);
        const Complex w1 = domain.factor1.grid[static_cast<std::size_t>(q1.w_index)];
        for (const PreimagePoint& q2 : grid.k2) {
            const Vector delta2 = delta_basis(p2, q2.z);
            const Complex w2 = domain.factor2.grid[static_cast<std::size_t>(q2.w_index)];
            const Matrix values = eval_element(f, w1, w2);
            Complex acc(0.0, 0.0);
            for (Index j = 0; j < delta1.size(); ++j)
                for (Index k = 0; k < delta2.size(); ++k)
                    acc += delta1(j) * delta2(k) * values(j, k);
            out.points.push_back(SpectrumPoint{q1.z, q2.z, acc});
        }
    }
    return out;
}

SpectrumSet spectrum(const Element& f, const MonicPolynomial& p1, const MonicPolynomial& p2,
                     const DomainSpec& domain, const PreimageGrid& grid) {
    return gelfand_transform(f, p1, p2, domain, grid);
}

VectorFunction1D decompose_poly_1d(const Vector& phi, const MonicPolynomial& p) {
    const Index d = p.degree();
    const Vector pc = p.coefficients();
    // p-adic expansion by repeated division
    std::vector<Vector> remainders;
    Vector current = phi;
    while (true) {
        if (current.size() - 1 < d) {
            remainders.push_back(current);
            break;
        }
        Vector q, r;
        poly_divmod(current, pc, q, r);
        remainders.push_back(r);
        current = q;
    }
    const Index nw = static_cast<Index>(remainders.size());
    VectorFunction1D f;
    f.coeff.assign(static_cast<std::size_t>(d), Matrix::Zero(nw, 1));
    for (Index j = 0; j < d; ++j)
        for (Index m = 0; m < nw; ++m)
            f.coeff[static_cast<std::size_t>(j)](m, 0) =
                poly_eval(remainders[static_cast<std::size_t>(m)], p.root(j));
    return f;
}

PolyCoeffFunction decompose_poly_2d(const Matrix& phi, const MonicPolynomial& p1,
                                    const MonicPolynomial& p2) {
    const Index d1 = p1.degree(), d2 = p2.degree();
    const Index na2 = phi.cols(); // powers of z2 present
    // step 1: decompose in z1 for every z2-power separately (the map is
    // linear in phi, so z2^a2 factors through)
    // inner[a2] : per component j, polynomial in w1
    std::vector<VectorFunction1D> inner;
    inner.reserve(static_cast<std::size_t>(na2));
    Index nw1 = 1;
    for (Index a2 = 0; a2 < na2; ++a2) {
        inner.push_back(decompose_poly_1d(phi.col(a2), p1));
        nw1 = std::max(nw1, inner.back().coeff[0].rows());
    }
    // step 2: for each (j, w1-power m) we now hold a polynomial in z2;
    // decompose it in z2
    Index nw2 = 1;
    std::vector<std::vector<VectorFunction1D>> rows(static_cast<std::size_t>(d1));
    for (Index j = 0; j < d1; ++j) {
        rows[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(nw1));
        for (Index m = 0; m < nw1; ++m) {
            Vector poly_z2 = Vector::Zero(na2);
            for (Index a2 = 0; a2 < na2; ++a2) {
                const Matrix& table = inner[static_cast<std::size_t>(a2)]
                                          .coeff[static_cast<std::size_t>(j)];
                if (m < table.rows()) poly_z2(a2) = table(m, 0);
            }
            rows[static_cast<std::size_t>(j)].push_back(decompose_poly_1d(poly_z2, p2));
            nw2 = std::max(nw2, rows[static_cast<std::size_t>(j)].back().coeff[0].rows());
        }
    }
    PolyCoeffFunction out(d1, d2, nw1 - 1, nw2 - 1);
    for (Index j = 0; j < d1; ++j)
        for (Index m = 0; m < nw1; ++m) {
            const VectorFunction1D& g = rows[static_cast<std::size_t>(j)]
                                            [static_cast<std::size_t>(m)];
            for (Index k = 0; k < d2; ++k) {
                const Matrix& table = g.coeff[static_cast<std::size_t>(k)];
                for (Index n = 0; n < table.rows(); ++n)
                    out.at(j, k, m, 0, n, 0) = table(n, 0);
            }
        }
    return out;
}

SemisimplicityResult semisimplicity_check(const MonicPolynomial& p, const FactorDomain& m) {
    SemisimplicityResult result;
    result.verdict = SemisimpleVerdict::semisimple;
    const double eps = m.grid_resolution;
    bool any_inconclusive = false;
    for (Complex v : critical_values(p)) {
        bool near_point_disc = false;
        bool interior = false;
        bool near_boundary = false;
        bool outside_all_positive = true;
        for (const Disc& disc : m.discs) {
            const double dist = std::abs(v - disc.center);
            if (disc.radius == 0.0) {
                if (dist <= eps) near_point_disc = true;
            } else {
                if (dist < disc.radius - eps) interior = true;
                if (std::abs(dist - disc.radius) <= eps) near_boundary = true;
                if (dist <= disc.radius + eps) outside_all_positive = false;
            }
        }
        if (near_point_disc && outside_all_positive) {
            result.verdict = SemisimpleVerdict::not_semisimple;
            result.witnesses.push_back(v);
        } else if (!interior && near_boundary) {
            any_inconclusive = true;
            result.witnesses.push_back(v);
        }
    }
    if (result.verdict == SemisimpleVerdict::semisimple && any_inconclusive)
        result.verdict = SemisimpleVerdict::inconclusive;
    return result;
}

} // namespace multicentric
