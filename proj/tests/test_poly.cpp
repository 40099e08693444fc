#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multicentric/poly.hpp"
#include "test_util.hpp"

using namespace multicentric;
using mctest::random_complex;
using mctest::random_poly;

namespace {
const Complex I(0.0, 1.0);
MonicPolynomial poly01() { return MonicPolynomial(make_root_set({{0.0, 0.0}, {1.0, 0.0}})); }
} // namespace

TEST_CASE("make_root_set validates distinctness") {
    CHECK(make_root_set({{0.0, 0.0}, {1.0, 0.0}}, 1e-9).size() == 2);
    CHECK_THROWS_AS(make_root_set({{0.0, 0.0}, {0.0, 0.0}}, 1e-9), DuplicateRoots);
    CHECK_THROWS_AS(make_root_set({{0.0, 0.0}, {1e-12, 0.0}}, 1e-9), DuplicateRoots);
    CHECK_THROWS_AS(make_root_set({}, 1e-9), EmptyRoots);
    CHECK_THROWS_AS(make_root_set({{0.0, 0.0}}, -1.0), ConfigError);
    // ordering preserved
    const RootSet rs = make_root_set({{2.0, 0.0}, {0.0, 1.0}});
    CHECK(rs[0] == Complex(2.0, 0.0));
    CHECK(rs[1] == Complex(0.0, 1.0));
}

TEST_CASE("eval_poly product form") {
    const MonicPolynomial p = poly01();
    CHECK(p.eval({2.0, 0.0}) == Complex(2.0, 0.0));
    CHECK(p.eval({0.0, 0.0}) == Complex(0.0, 0.0)); // exact at a stored root
    CHECK(p.eval({0.5, 0.0}) == Complex(-0.25, 0.0));
}

TEST_CASE("derivative_at_root") {
    const MonicPolynomial p = poly01();
    CHECK(p.derivative_at_root(0) == Complex(-1.0, 0.0));
    CHECK(p.derivative_at_root(1) == Complex(1.0, 0.0));
    const MonicPolynomial q(make_root_set({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}));
    CHECK(q.derivative_at_root(1) == Complex(-1.0, 0.0)); // (1-0)(1-2)
    CHECK_THROWS_AS(p.derivative_at_root(2), IndexOutOfRange);
    CHECK_THROWS_AS(p.derivative_at_root(-1), IndexOutOfRange);
}

TEST_CASE("derivative_at_root agrees with finite differences") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        const double h = 1e-6;
        for (Index l = 0; l < p.degree(); ++l) {
            const Complex lam = p.root(l);
            const Complex fd = (p.eval(lam + h) - p.eval(lam - h)) / (2.0 * h);
            const Complex exact = p.derivative_at_root(l);
            CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("delta basis interpolation and examples") {
    const MonicPolynomial p = poly01();
    const Vector at0 = delta_basis(p, {0.0, 0.0});
    CHECK(at0(0) == Complex(1.0, 0.0));
    CHECK(at0(1) == Complex(0.0, 0.0));
    const Vector mid = delta_basis(p, {0.5, 0.0});
    CHECK(mid(0) == Complex(0.5, 0.0));
    CHECK(mid(1) == Complex(0.5, 0.0));
}

TEST_CASE("partition of unity over random root sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        for (int i = 0; i < 20; ++i) {
            const Complex z = random_complex(rng, 10.0);
            CHECK(std::abs(delta_basis(p, z).sum() - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("delta square identity, hand instance for roots (0,1)") {
    // with sigma_12 = sigma_21 = -1:
    //   delta_1(z)^2 = delta_1(z) - p(z) (sigma_12 delta_1 + sigma_21 delta_2)
    const MonicPolynomial p = poly01();
    const SigmaTable s = sigma_table(p);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Complex z = random_complex(rng, 3.0);
        const Vector d = delta_basis(p, z);
        const Complex w = p.eval(z);
        const Complex rhs = d(0) - w * (s.entries(0, 1) * d(0) + s.entries(1, 0) * d(1));
        CHECK(std::abs(d(0) * d(0) - rhs) <= 1e-12 * std::max(1.0, std::norm(d(0))));
    }
}

TEST_CASE("sigma table values and oracle") {
    const MonicPolynomial p = poly01();
    const SigmaTable s = sigma_table(p);
    CHECK(s.entries(0, 1) == Complex(-1.0, 0.0));
    CHECK(s.entries(1, 0) == Complex(-1.0, 0.0));
    CHECK(s.entries(0, 0) == Complex(0.0, 0.0));

    // per-entry defining-formula oracle on a degree-3 polynomial
    const MonicPolynomial q(make_root_set({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}));
    const SigmaTable sq = sigma_table(q);
    for (Index j = 0; j < 3; ++j) {
        CHECK(sq.entries(j, j) == Complex(0.0, 0.0));
        for (Index l = 0; l < 3; ++l) {
            if (j == l) continue;
            Complex dp(1.0, 0.0);
            for (Index m = 0; m < 3; ++m)
                if (m != l) dp *= q.root(l) - q.root(m);
            const Complex expect = 1.0 / (dp * (q.root(j) - q.root(l)));
            CHECK(std::abs(sq.entries(j, l) - expect) <= 1e-12 * std::abs(expect));
        }
    }
}

TEST_CASE("coupling data ties to the sigma table") {
    const MonicPolynomial p = poly01();
    const CouplingData c = coupling(p);
    CHECK(c.L(0, 1) == Complex(-1.0, 0.0));
    CHECK(c.L(1, 0) == Complex(1.0, 0.0));
    CHECK(c.l_vec(0) == Complex(-1.0, 0.0));
    CHECK(c.l_vec(1) == Complex(1.0, 0.0));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const MonicPolynomial q = random_poly(rng, 2 + trial % 5);
        const CouplingData cq = coupling(q);
        const SigmaTable sq = sigma_table(q);
        for (Index j = 0; j < q.degree(); ++j)
            for (Index l = 0; l < q.degree(); ++l) {
                CHECK(std::abs(cq.L(j, l) + cq.L(l, j)) == 0.0); // antisymmetry
                if (j != l) {
                    const Complex expect = cq.L(j, l) * cq.l_vec(l);
                    CHECK(std::abs(sq.entries(j, l) - expect) <=
                          1e-12 * std::max(1.0, std::abs(expect)));
                }
            }
    }
}

TEST_CASE("critical values") {
    const MonicPolynomial p = poly01();
    const auto cv = critical_values(p);
    REQUIRE(cv.size() == 1);
    CHECK(std::abs(cv[0] - Complex(-0.25, 0.0)) <= 1e-12);

    const MonicPolynomial q(make_root_set({{-1.0, 0.0}, {1.0, 0.0}}));
    const auto cvq = critical_values(q);
    REQUIRE(cvq.size() == 1);
    CHECK(std::abs(cvq[0] - Complex(-1.0, 0.0)) <= 1e-12);

    const MonicPolynomial lin(make_root_set({{3.0, 0.0}}));
    CHECK(critical_values(lin).empty());
}

TEST_CASE("coefficient helpers") {
    // (z-1)(z+1) = z^2 - 1
    const Vector c = expand_from_roots({{1.0, 0.0}, {-1.0, 0.0}});
    CHECK(c(0) == Complex(-1.0, 0.0));
    CHECK(c(1) == Complex(0.0, 0.0));
    CHECK(c(2) == Complex(1.0, 0.0));

    Vector q, r;
    // z^3 / (z^2 - 1) = z remainder z
    Vector cubic = Vector::Zero(4);
    cubic(3) = 1.0;
    poly_divmod(cubic, c, q, r);
    CHECK(poly_eval(q, {2.0, 0.0}) == Complex(2.0, 0.0));
    CHECK(poly_eval(r, {2.0, 0.0}) == Complex(2.0, 0.0));

    const auto roots = poly_roots(c);
    REQUIRE(roots.size() == 2);
    const double r0 = std::abs(roots[0] - Complex(1, 0)) + std::abs(roots[1] - Complex(-1, 0));
    const double r1 = std::abs(roots[0] - Complex(-1, 0)) + std::abs(roots[1] - Complex(1, 0));
    CHECK(std::min(r0, r1) <= 1e-10);
}
