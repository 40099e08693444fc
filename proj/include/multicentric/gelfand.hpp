#ifndef MULTICENTRIC_GELFAND_HPP
#define MULTICENTRIC_GELFAND_HPP

#include "multicentric/function_space.hpp"
#include "multicentric/poly.hpp"

namespace multicentric {

/// One-variable algebra element with polynomial components in (w, conj w):
/// f_j(w) = sum_{a,b} coeff[j](a,b) w^a conj(w)^b.
struct VectorFunction1D {
    std::vector<Matrix> coeff; // one (N+1) x (N+1) table per component

    Index degree() const { return static_cast<Index>(coeff.size()); }
    Complex eval(Index j, Complex w) const;
    bool holomorphic() const;
    static VectorFunction1D unit(Index d);
};

/// Evaluation functional chi_{(z1,z2)} with its cached data.
struct Character {
    Complex z1, z2;
    Vector delta1, delta2; // delta bases at z1, z2
    Complex w1, w2;        // p1(z1), p2(z2)
};

Character make_character(const MonicPolynomial& p1, const MonicPolynomial& p2, Complex z1,
                         Complex z2);

/// phi(z1,z2) = sum_{j,k} delta_{1,j}(z1) delta_{2,k}(z2) f_{jk}(p1(z1), p2(z2)).
Complex multicentric_eval(const Element& f, const MonicPolynomial& p1,
                          const MonicPolynomial& p2, Complex z1, Complex z2);

Complex character_apply(const Character& chi, const Element& f);

/// Sampled stand-in for K_i = p_i^{-1}(M_i): each preimage records the
/// index of the grid point it maps onto, so grid-backed elements stay
/// evaluable on exact grid points.
struct PreimagePoint {
    Complex z;
    Index w_index; // into the factor grid
};

struct PreimageGrid {
    std::vector<PreimagePoint> k1, k2;
};

PreimageGrid make_preimage_grid(const MonicPolynomial& p1, const MonicPolynomial& p2,
                                const DomainSpec& domain);

struct SpectrumPoint {
    Complex z1, z2;
    Complex value;
};

struct SpectrumSet {
    std::vector<SpectrumPoint> points;
};

/// Gelfand transform over the preimage grid: (z1,z2) -> f_hat(z1,z2).
SpectrumSet gelfand_transform(const Element& f, const MonicPolynomial& p1,
                              const MonicPolynomial& p2, const DomainSpec& domain,
                              const PreimageGrid& grid);

/// sigma(f) = { f_hat(z1,z2) : (z1,z2) in K1 x K2 }.
SpectrumSet spectrum(const Element& f, const MonicPolynomial& p1, const MonicPolynomial& p2,
                     const DomainSpec& domain, const PreimageGrid& grid);

/// Multicentric decomposition of a polynomial phi (ascending coefficients
/// in z): p-adic expansion phi = sum_m r_m(z) p(z)^m, f_j(w) = sum_m r_m(lambda_j) w^m.
VectorFunction1D decompose_poly_1d(const Vector& phi, const MonicPolynomial& p);

/// Bivariate decomposition: phi(j1, j2) is the coefficient of z1^j1 z2^j2.
/// Result carries holomorphic monomials only.
PolyCoeffFunction decompose_poly_2d(const Matrix& phi, const MonicPolynomial& p1,
                                    const MonicPolynomial& p2);

enum class SemisimpleVerdict { semisimple, not_semisimple, inconclusive };

struct SemisimplicityResult {
    SemisimpleVerdict verdict;
    std::vector<Complex> witnesses; // offending critical values, if any
};

/// C_Lambda(M) is semisimple iff M contains no isolated critical value of p.
/// A critical value is isolated when it coincides (within grid_resolution)
/// with a radius-0 disc while lying outside every positive-radius disc;
/// boundary coincidences at the grid resolution are reported inconclusive.
SemisimplicityResult semisimplicity_check(const MonicPolynomial& p, const FactorDomain& m);

} // namespace multicentric

#endif
