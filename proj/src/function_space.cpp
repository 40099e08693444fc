#include "multicentric/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "multicentric/algebra2d.hpp"

namespace multicentric {

FactorDomain make_factor_domain(std::vector<Disc> discs, int resolution) {
    if (discs.empty()) throw ConfigError("factor domain needs at least one disc");
    if (resolution < 1) throw ConfigError("grid resolution must be >= 1");
    FactorDomain dom;
    dom.discs = std::move(discs);
    double max_radius = 0.0;
    for (const Disc& disc : dom.discs) {
        if (disc.radius < 0.0) throw ConfigError("disc radius must be nonnegative");
        max_radius = std::max(max_radius, disc.radius);
        if (disc.radius == 0.0) {
            dom.grid.push_back(disc.center);
            continue;
        }
        dom.grid.push_back(disc.center);
        for (int ring = 1; ring <= resolution; ++ring) {
            const double r = disc.radius * double(ring) / double(resolution);
            const int npts = std::max(resolution, 3);
            for (int t = 0; t < npts; ++t) {
                const double theta = 2.0 * std::numbers::pi * double(t) / double(npts);
                dom.grid.push_back(disc.center + Complex(r * std::cos(theta), r * std::sin(theta)));
            }
        }
    }
    dom.grid_resolution =
        max_radius > 0.0 ? max_radius / double(resolution) : 1e-9;
    return dom;
}

bool domain_contains(const FactorDomain& dom, Complex w) {
    for (const Disc& disc : dom.discs)
        if (std::abs(w - disc.center) <= disc.radius) return true;
    return false;
}

PolyCoeffFunction::PolyCoeffFunction(Index d1, Index d2, Index n1, Index n2)
    : d1_(d1), d2_(d2), n1_(n1), n2_(n2) {
    if (d1 < 1 || d2 < 1 || n1 < 0 || n2 < 0)
        throw ConfigError("PolyCoeffFunction: bad dimensions");
    c_.assign(static_cast<std::size_t>(d1 * d2 * (n1 + 1) * (n1 + 1) * (n2 + 1) * (n2 + 1)),
              Complex(0.0, 0.0));
}

Index PolyCoeffFunction::offset(Index j, Index k, Index a1, Index b1, Index a2,
                                Index b2) const {
    if (j < 0 || j >= d1_ || k < 0 || k >= d2_) throw IndexOutOfRange("bad component index");
    if (a1 < 0 || a1 > n1_ || b1 < 0 || b1 > n1_ || a2 < 0 || a2 > n2_ || b2 < 0 || b2 > n2_)
        throw IndexOutOfRange("monomial power out of range");
    Index off = j;
    off = off * d2_ + k;
    off = off * (n1_ + 1) + a1;
    off = off * (n1_ + 1) + b1;
    off = off * (n2_ + 1) + a2;
    off = off * (n2_ + 1) + b2;
    return off;
}

Complex& PolyCoeffFunction::at(Index j, Index k, Index a1, Index b1, Index a2, Index b2) {
    return c_[static_cast<std::size_t>(offset(j, k, a1, b1, a2, b2))];
}

Complex PolyCoeffFunction::at(Index j, Index k, Index a1, Index b1, Index a2,
                              Index b2) const {
    return c_[static_cast<std::size_t>(offset(j, k, a1, b1, a2, b2))];
}

Matrix PolyCoeffFunction::eval(Complex w1, Complex w2) const {
    // precompute power tables
    std::vector<Complex> pw1(n1_ + 1), pc1(n1_ + 1), pw2(n2_ + 1), pc2(n2_ + 1);
    pw1[0] = pc1[0] = pw2[0] = pc2[0] = Complex(1.0, 0.0);
    for (Index i = 1; i <= n1_; ++i) {
        pw1[i] = pw1[i - 1] * w1;
        pc1[i] = pc1[i - 1] * std::conj(w1);
    }
    for (Index i = 1; i <= n2_; ++i) {
        pw2[i] = pw2[i - 1] * w2;
        pc2[i] = pc2[i - 1] * std::conj(w2);
    }
    Matrix out = Matrix::Zero(d1_, d2_);
    for (Index j = 0; j < d1_; ++j)
        for (Index k = 0; k < d2_; ++k) {
            Complex acc(0.0, 0.0);
            for (Index a1 = 0; a1 <= n1_; ++a1)
                for (Index b1 = 0; b1 <= n1_; ++b1)
                    for (Index a2 = 0; a2 <= n2_; ++a2)
                        for (Index b2 = 0; b2 <= n2_; ++b2) {
                            const Complex coef = at(j, k, a1, b1, a2, b2);
                            if (coef == Complex(0.0, 0.0)) continue;
                            acc += coef * pw1[a1] * pc1[b1] * pw2[a2] * pc2[b2];
                        }
            out(j, k) = acc;
        }
    return out;
}

bool PolyCoeffFunction::holomorphic() const {
    for (Index j = 0; j < d1_; ++j)
        for (Index k = 0; k < d2_; ++k)
            for (Index a1 = 0; a1 <= n1_; ++a1)
                for (Index b1 = 0; b1 <= n1_; ++b1)
                    for (Index a2 = 0; a2 <= n2_; ++a2)
                        for (Index b2 = 0; b2 <= n2_; ++b2)
                            if ((b1 > 0 || b2 > 0) &&
                                at(j, k, a1, b1, a2, b2) != Complex(0.0, 0.0))
                                return false;
    return true;
}

PolyCoeffFunction PolyCoeffFunction::unit(Index d1, Index d2) {
    PolyCoeffFunction f(d1, d2, 0, 0);
    for (Index j = 0; j < d1; ++j)
        for (Index k = 0; k < d2; ++k) f.at(j, k, 0, 0, 0, 0) = 1.0;
    return f;
}

const Matrix& GridFunction::at(Index i1, Index i2) const {
    return samples[static_cast<std::size_t>(i1 * Index(domain.factor2.grid.size()) + i2)];
}

Matrix& GridFunction::at(Index i1, Index i2) {
    return samples[static_cast<std::size_t>(i1 * Index(domain.factor2.grid.size()) + i2)];
}

namespace {

Index exact_grid_index(const std::vector<Complex>& grid, Complex w, const char* who) {
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] == w) return static_cast<Index>(i);
    throw PointNotOnGrid(std::string(who) + ": point is not a grid point");
}

} // namespace

Matrix eval_element(const Element& f, Complex w1, Complex w2) {
    if (const auto* poly = std::get_if<PolyCoeffFunction>(&f)) return poly->eval(w1, w2);
    const auto& grid = std::get<GridFunction>(f);
    const Index i1 = exact_grid_index(grid.domain.factor1.grid, w1, "eval_element");
    const Index i2 = exact_grid_index(grid.domain.factor2.grid, w2, "eval_element");
    return grid.at(i1, i2);
}

GridFunction sample_element(const Element& f, const DomainSpec& domain) {
    GridFunction out;
    out.domain = domain;
    const auto& g1 = domain.factor1.grid;
    const auto& g2 = domain.factor2.grid;
    out.samples.reserve(g1.size() * g2.size());
    for (Complex w1 : g1)
        for (Complex w2 : g2) out.samples.push_back(eval_element(f, w1, w2));
    return out;
}

GridFunction polyprod_elements(const MonicPolynomial& p1, const MonicPolynomial& p2,
                               const Element& f, const Element& g, const DomainSpec& domain) {
    GridFunction out;
    out.domain = domain;
    for (Complex w1 : domain.factor1.grid)
        for (Complex w2 : domain.factor2.grid)
            out.samples.push_back(polyprod2_scalar(p1, p2, w1, w2, eval_element(f, w1, w2),
                                                   eval_element(g, w1, w2)));
    return out;
}

double sup_norm(const Element& f, const DomainSpec& domain) {
    double norm = 0.0;
    for (Complex w1 : domain.factor1.grid)
        for (Complex w2 : domain.factor2.grid)
            norm = std::max(norm, eval_element(f, w1, w2).cwiseAbs().maxCoeff());
    return norm;
}

double op_norm(const MonicPolynomial& p1, const MonicPolynomial& p2, const Element& f,
               const DomainSpec& domain) {
    double norm = 0.0;
    for (Complex w1 : domain.factor1.grid)
        for (Complex w2 : domain.factor2.grid) {
            const Matrix m = mult_matrix2(p1, p2, w1, w2, eval_element(f, w1, w2));
            norm = std::max(norm, m.cwiseAbs().rowwise().sum().maxCoeff());
        }
    return norm;
}

double equivalence_bound(const MonicPolynomial& p1, const MonicPolynomial& p2,
                         const DomainSpec& domain) {
    const auto factor_terms = [](const MonicPolynomial& p, const FactorDomain& dom) {
        double w_max = 0.0;
        for (Complex w : dom.grid) w_max = std::max(w_max, std::abs(w));
        const SigmaTable s = sigma_table(p);
        double s_max = 0.0;
        for (Index j = 0; j < p.degree(); ++j) {
            double row = 0.0;
            for (Index l = 0; l < p.degree(); ++l)
                if (l != j) row += std::abs(s.entries(j, l));
            s_max = std::max(s_max, row);
        }
        return w_max * s_max;
    };
    const double t1 = factor_terms(p1, domain.factor1);
    const double t2 = factor_terms(p2, domain.factor2);
    return 1.0 + 4.0 * t1 + 4.0 * t2 + 16.0 * t1 * t2;
}

GridFunction slice_w2(const Element& f, const DomainSpec& domain, Complex y0) {
    exact_grid_index(domain.factor2.grid, y0, "slice_w2");
    GridFunction out;
    out.domain.factor1 = domain.factor1;
    out.domain.factor2 = FactorDomain{{Disc{y0, 0.0}}, {y0}, domain.factor2.grid_resolution};
    for (Complex w1 : domain.factor1.grid) out.samples.push_back(eval_element(f, w1, y0));
    return out;
}

GridFunction slice_w1(const Element& f, const DomainSpec& domain, Complex x0) {
    exact_grid_index(domain.factor1.grid, x0, "slice_w1");
    GridFunction out;
    out.domain.factor1 = FactorDomain{{Disc{x0, 0.0}}, {x0}, domain.factor1.grid_resolution};
    out.domain.factor2 = domain.factor2;
    for (Complex w2 : domain.factor2.grid) out.samples.push_back(eval_element(f, x0, w2));
    return out;
}

} // namespace multicentric
