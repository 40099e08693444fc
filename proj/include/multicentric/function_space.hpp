#ifndef MULTICENTRIC_FUNCTION_SPACE_HPP
#define MULTICENTRIC_FUNCTION_SPACE_HPP

#include <map>
#include <variant>
#include <vector>

#include "multicentric/poly.hpp"

namespace multicentric {

struct Disc {
    Complex center;
    double radius = 0.0;
};

/// One factor M_i: a finite union of closed discs plus the sampling grid
/// used for every norm/spectrum computation.  grid_resolution is the
/// length scale of the sampling (used as the decidability margin in the
/// semisimplicity check).
struct FactorDomain {
    std::vector<Disc> discs;
    std::vector<Complex> grid;
    double grid_resolution = 0.0;
};

struct DomainSpec {
    FactorDomain factor1;
    FactorDomain factor2;
};

/// Default grid: per disc, concentric rings with roughly resolution^2
/// points; a point-disc (radius 0) contributes its center only.
FactorDomain make_factor_domain(std::vector<Disc> discs, int resolution);

bool domain_contains(const FactorDomain& dom, Complex w);

/// Element given by a coefficient tensor in (w1, conj w1, w2, conj w2):
/// component (j,k) is  sum c(j,k,a1,b1,a2,b2) w1^a1 conj(w1)^b1 w2^a2 conj(w2)^b2.
class PolyCoeffFunction {
public:
    PolyCoeffFunction(Index d1, Index d2, Index n1, Index n2);

    Index d1() const { return d1_; }
    Index d2() const { return d2_; }
    Index max_degree1() const { return n1_; }
    Index max_degree2() const { return n2_; }

    Complex& at(Index j, Index k, Index a1, Index b1, Index a2, Index b2);
    Complex at(Index j, Index k, Index a1, Index b1, Index a2, Index b2) const;

    Matrix eval(Complex w1, Complex w2) const;
    /// true when no conjugate monomial (b1 or b2 > 0) carries a nonzero
    /// coefficient
    bool holomorphic() const;

    static PolyCoeffFunction unit(Index d1, Index d2);

private:
    Index offset(Index j, Index k, Index a1, Index b1, Index a2, Index b2) const;
    Index d1_, d2_, n1_, n2_;
    std::vector<Complex> c_;
};

/// Element given by samples over the full grid of a DomainSpec.
struct GridFunction {
    DomainSpec domain;
    std::vector<Matrix> samples; // index i1 * grid2.size() + i2

    const Matrix& at(Index i1, Index i2) const;
    Matrix& at(Index i1, Index i2);
};

using Element = std::variant<PolyCoeffFunction, GridFunction>;

/// Evaluate an element at a point.  GridFunction lookup is exact-point
/// only and throws PointNotOnGrid otherwise.
Matrix eval_element(const Element& f, Complex w1, Complex w2);

/// Sample an element over the grid of a domain.
GridFunction sample_element(const Element& f, const DomainSpec& domain);

/// Pointwise polyproduct over the grid.
GridFunction polyprod_elements(const MonicPolynomial& p1, const MonicPolynomial& p2,
                               const Element& f, const Element& g, const DomainSpec& domain);

/// |f|_inf = max over grid points and components of the modulus.
double sup_norm(const Element& f, const DomainSpec& domain);

/// Operator norm sup_{|g|_inf <= 1} |f (*) g|_inf.  Since the product is
/// pointwise bilinear this is the max over grid points of the
/// infinity-induced norm (max absolute row sum) of mult_matrix2.
double op_norm(const MonicPolynomial& p1, const MonicPolynomial& p2, const Element& f,
               const DomainSpec& domain);

/// Explicit equivalence constant C with sup <= op <= C * sup on the grid:
///   C = 1 + 4 W1 S1 + 4 W2 S2 + 16 W1 W2 S1 S2,
/// W_i the max grid modulus of factor i and S_i = max_j sum_{l!=j} |sigma_{i,jl}|.
double equivalence_bound(const MonicPolynomial& p1, const MonicPolynomial& p2,
                         const DomainSpec& domain);

/// Fix the second argument at grid point y0: the map w1 -> f(w1, y0) as a
/// GridFunction whose second factor is the single point y0.
GridFunction slice_w2(const Element& f, const DomainSpec& domain, Complex y0);
GridFunction slice_w1(const Element& f, const DomainSpec& domain, Complex x0);

} // namespace multicentric

#endif
