#include "multicentric/verify.hpp"

#include <cmath>
#include <random>

#include "multicentric/algebra1d.hpp"
#include "multicentric/algebra2d.hpp"
#include "multicentric/gelfand.hpp"

namespace multicentric {

namespace {

Complex random_complex(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return Complex(u(rng), u(rng));
}

Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, double radius) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = random_complex(rng, radius);
    return m;
}

double domain_radius(const FactorDomain& dom) {
    double r = 0.0;
    for (Complex w : dom.grid) r = std::max(r, std::abs(w));
    return std::max(r, 1.0);
}

// max over the delta-identity family (the squares and the cross products)
double delta_identity_error(const MonicPolynomial& p, Complex z) {
    const Index d = p.degree();
    const Vector delta = delta_basis(p, z);
    const Complex w = p.eval(z);
    const SigmaTable s = sigma_table(p);
    const double scale = std::max(1.0, delta.cwiseAbs().maxCoeff());
    double worst = 0.0;
    for (Index j = 0; j < d; ++j) {
        Complex rhs = delta(j);
        for (Index l = 0; l < d; ++l)
            if (l != j) rhs -= w * (s.entries(j, l) * delta(j) + s.entries(l, j) * delta(l));
        worst = std::max(worst, std::abs(delta(j) * delta(j) - rhs) / (scale * scale));
        for (Index l = 0; l < d; ++l) {
            if (l == j) continue;
            const Complex cross = w * (s.entries(j, l) * delta(j) + s.entries(l, j) * delta(l));
            worst = std::max(worst, std::abs(delta(j) * delta(l) - cross) / (scale * scale));
        }
    }
    return worst;
}

} // namespace

std::vector<PropertyResult> run_property_suite(const MonicPolynomial& p1,
                                               const MonicPolynomial& p2,
                                               const DomainSpec& domain, std::uint64_t seed,
                                               const SuiteConfig& config) {
    std::mt19937_64 rng(seed);
    std::vector<PropertyResult> results;
    const Index d1 = p1.degree(), d2 = p2.degree();
    const double r1 = domain_radius(domain.factor1);
    const double r2 = domain_radius(domain.factor2);

    // delta identities for both factors
    {
        double worst = 0.0;
        for (long i = 0; i < config.delta_identity_points; ++i) {
            worst = std::max(worst, delta_identity_error(p1, random_complex(rng, 4.0)));
            worst = std::max(worst, delta_identity_error(p2, random_complex(rng, 4.0)));
        }
        if (config.inject_failure) worst += 1.0;
        results.push_back({"delta_identities", worst <= config.tol_delta, worst,
                           config.delta_identity_points});
    }

    // partition of unity
    {
        double worst = 0.0;
        for (long i = 0; i < config.delta_identity_points; ++i) {
            worst = std::max(worst,
                             std::abs(delta_basis(p1, random_complex(rng, 10.0)).sum() - 1.0));
            worst = std::max(worst,
                             std::abs(delta_basis(p2, random_complex(rng, 10.0)).sum() - 1.0));
        }
        results.push_back({"partition_of_unity", worst <= 1e-10, worst,
                           config.delta_identity_points});
    }

    // scalar vs boxed polyproduct forms
    {
        double worst = 0.0;
        for (long i = 0; i < config.form_equivalence_instances; ++i) {
            const Complex w1 = random_complex(rng, r1);
            const Complex w2 = random_complex(rng, r2);
            const Matrix f = random_matrix(rng, d1, d2, 1.0);
            const Matrix g = random_matrix(rng, d1, d2, 1.0);
            const Matrix a = polyprod2_scalar(p1, p2, w1, w2, f, g);
            const Matrix b = polyprod2_boxed(p1, p2, w1, w2, f, g);
            const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
            worst = std::max(worst, (a - b).cwiseAbs().maxCoeff() / scale);
        }
        results.push_back({"form_equivalence", worst <= config.tol_forms, worst,
                           config.form_equivalence_instances});
    }

    // homomorphism: L(f (*) g) = (L f)(L g)
    {
        double worst = 0.0;
        for (long i = 0; i < config.homomorphism_instances; ++i) {
            const Complex z1 = random_complex(rng, 2.0);
            const Complex z2 = random_complex(rng, 2.0);
            const Complex w1 = p1.eval(z1);
            const Complex w2 = p2.eval(z2);
            const Matrix f = random_matrix(rng, d1, d2, 1.0);
            const Matrix g = random_matrix(rng, d1, d2, 1.0);
            const Vector delta1 = delta_basis(p1, z1);
            const Vector delta2 = delta_basis(p2, z2);
            const Complex lf = (delta1.transpose() * f * delta2).value();
            const Complex lg = (delta1.transpose() * g * delta2).value();
            const Complex lfg =
                (delta1.transpose() * polyprod2_scalar(p1, p2, w1, w2, f, g) * delta2).value();
            const double scale = std::max({1.0, std::abs(lf * lg), std::abs(lfg)});
            worst = std::max(worst, std::abs(lfg - lf * lg) / scale);
        }
        results.push_back({"homomorphism", worst <= config.tol_homomorphism, worst,
                           config.homomorphism_instances});
    }

    // norm inequalities on the supplied domain
    {
        double worst_ratio = 0.0; // how far any inequality is violated
        const double bound = equivalence_bound(p1, p2, domain);
        for (long i = 0; i < config.norm_instances; ++i) {
            GridFunction f;
            f.domain = domain;
            GridFunction g;
            g.domain = domain;
            const std::size_t npts =
                domain.factor1.grid.size() * domain.factor2.grid.size();
            for (std::size_t q = 0; q < npts; ++q) {
                f.samples.push_back(random_matrix(rng, d1, d2, 1.0));
                g.samples.push_back(random_matrix(rng, d1, d2, 1.0));
            }
            const double sup_f = sup_norm(f, domain);
            const double op_f = op_norm(p1, p2, f, domain);
            const double op_g = op_norm(p1, p2, g, domain);
            const double op_fg =
                op_norm(p1, p2, polyprod_elements(p1, p2, f, g, domain), domain);
            worst_ratio = std::max(worst_ratio, sup_f / op_f - 1.0);
            worst_ratio = std::max(worst_ratio, op_f / (bound * sup_f) - 1.0);
            worst_ratio = std::max(worst_ratio, op_fg / (op_f * op_g) - 1.0);
        }
        results.push_back({"norm_inequalities", worst_ratio <= 1e-9, worst_ratio,
                           config.norm_instances});
    }

    // characters: normalization and multiplicativity
    {
        double worst = 0.0;
        for (long i = 0; i < config.character_points; ++i) {
            const Complex z1 = random_complex(rng, 2.0);
            const Complex z2 = random_complex(rng, 2.0);
            const Character chi = make_character(p1, p2, z1, z2);
            Complex total(0.0, 0.0);
            for (Index j = 0; j < d1; ++j)
                for (Index k = 0; k < d2; ++k) total += chi.delta1(j) * chi.delta2(k);
            worst = std::max(worst, std::abs(total - 1.0));

            PolyCoeffFunction f(d1, d2, 1, 1);
            PolyCoeffFunction g(d1, d2, 1, 1);
            for (Index j = 0; j < d1; ++j)
                for (Index k = 0; k < d2; ++k)
                    for (Index a1 = 0; a1 <= 1; ++a1)
                        for (Index a2 = 0; a2 <= 1; ++a2) {
                            f.at(j, k, a1, 0, a2, 0) = random_complex(rng, 1.0);
                            g.at(j, k, a1, 0, a2, 0) = random_complex(rng, 1.0);
                        }
            const Matrix fv = f.eval(chi.w1, chi.w2);
            const Matrix gv = g.eval(chi.w1, chi.w2);
            const Matrix prod = polyprod2_scalar(p1, p2, chi.w1, chi.w2, fv, gv);
            Complex chi_f(0.0, 0.0), chi_g(0.0, 0.0), chi_fg(0.0, 0.0);
            for (Index j = 0; j < d1; ++j)
                for (Index k = 0; k < d2; ++k) {
                    const Complex weight = chi.delta1(j) * chi.delta2(k);
                    chi_f += weight * fv(j, k);
                    chi_g += weight * gv(j, k);
                    chi_fg += weight * prod(j, k);
                }
            const double scale = std::max({1.0, std::abs(chi_f * chi_g), std::abs(chi_fg)});
            worst = std::max(worst, std::abs(chi_fg - chi_f * chi_g) / scale);
        }
        results.push_back({"characters", worst <= config.tol_characters, worst,
                           config.character_points});
    }

    return results;
}

} // namespace multicentric
