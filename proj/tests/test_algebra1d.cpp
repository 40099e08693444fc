#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multicentric/algebra1d.hpp"
#include "test_util.hpp"

using namespace multicentric;
using mctest::random_complex;
using mctest::random_poly;
using mctest::random_vector;

namespace {
MonicPolynomial poly01() { return MonicPolynomial(make_root_set({{0.0, 0.0}, {1.0, 0.0}})); }

Vector vec2(Complex a, Complex b) {
    Vector v(2);
    v << a, b;
    return v;
}
} // namespace

TEST_CASE("box") {
    Vector constant = vec2(1.0, 1.0);
    CHECK(box(constant).isZero(0.0));

    const Matrix b = box(vec2(2.0, 0.0));
    CHECK(b(0, 0) == Complex(0.0, 0.0));
    CHECK(b(0, 1) == Complex(2.0, 0.0));
    CHECK(b(1, 0) == Complex(-2.0, 0.0));
    CHECK(b(1, 1) == Complex(0.0, 0.0));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const Vector a = random_vector(rng, 2 + i % 5);
        CHECK((box(a) + box(a).transpose()).isZero(0.0));
    }
}

TEST_CASE("polyprod_point hand anchor") {
    const MonicPolynomial p = poly01();
    const Vector out = polyprod_point(p, {1.0, 0.0}, vec2(2.0, 0.0), vec2(3.0, 1.0));
    CHECK(std::abs(out(0) - Complex(10.0, 0.0)) <= 1e-14);
    CHECK(std::abs(out(1) - Complex(4.0, 0.0)) <= 1e-14);

    // interpolation cross-check on the fiber p(z) = 1:
    // L(a)*L(b) = (2-2z)(3-2z) = 10-6z whenever z^2-z = 1, and
    // L((10,4)) = 10*(1-z) + 4*z = 10-6z.
    const Complex z = 0.5 * (1.0 + std::sqrt(5.0)); // root of z^2 - z - 1
    const Vector d = delta_basis(p, z);
    const Complex lhs = d(0) * out(0) + d(1) * out(1);
    const Complex rhs = (d(0) * 2.0) * (d(0) * 3.0 + d(1) * 1.0);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
}

TEST_CASE("polyprod_point unit, Hadamard limit, shapes") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        const Index d = p.degree();
        const Complex w = random_complex(rng, 2.0);
        const Vector b = random_vector(rng, d);
        const Vector ones = Vector::Ones(d);
        CHECK((polyprod_point(p, w, ones, b) - b).cwiseAbs().maxCoeff() <= 1e-14);
        const Vector a = random_vector(rng, d);
        CHECK((polyprod_point(p, {0.0, 0.0}, a, b) - a.cwiseProduct(b))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-15);
        // commutativity must be exact in floating point
        CHECK((polyprod_point(p, w, a, b) - polyprod_point(p, w, b, a)).isZero(0.0));
    }
    CHECK_THROWS_AS(polyprod_point(poly01(), {0.0, 0.0}, Vector::Ones(3), Vector::Ones(2)),
                    DimensionMismatch);
}

TEST_CASE("boxed form matches component form") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        const Complex w = random_complex(rng, 2.0);
        const Vector a = random_vector(rng, p.degree());
        const Vector b = random_vector(rng, p.degree());
        const Vector u = polyprod_point(p, w, a, b);
        const Vector v = polyprod_point_boxed(p, w, a, b);
        CHECK((u - v).cwiseAbs().maxCoeff() <=
              1e-12 * std::max(1.0, u.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("basis_product_1d closed forms, roots (0,1)") {
    const MonicPolynomial p = poly01();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        const Complex w = random_complex(rng, 2.0);
        // e_1 (*) e_1 = e_1 + w (e_1 + e_2) when sigma_12 = sigma_21 = -1
        const Vector sq = basis_product_1d(p, w, 0, 0);
        CHECK(std::abs(sq(0) - (1.0 + w)) <= 1e-14);
        CHECK(std::abs(sq(1) - w) <= 1e-14);
        // e_1 (*) e_2 = -w (e_1 + e_2)
        const Vector cross = basis_product_1d(p, w, 0, 1);
        CHECK(std::abs(cross(0) + w) <= 1e-14);
        CHECK(std::abs(cross(1) + w) <= 1e-14);
    }
    CHECK_THROWS_AS(basis_product_1d(p, {0.0, 0.0}, 2, 0), IndexOutOfRange);
}

TEST_CASE("basis_product_1d matches polyprod on coordinate vectors; unit column sums") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        const Index d = p.degree();
        const Complex w = random_complex(rng, 2.0);
        Vector colsum;
        for (Index j = 0; j < d; ++j) {
            colsum = Vector::Zero(d);
            for (Index i = 0; i < d; ++i) {
                const Vector got = basis_product_1d(p, w, i, j);
                Vector ei = Vector::Zero(d);
                ei(i) = 1.0;
                Vector ej = Vector::Zero(d);
                ej(j) = 1.0;
                const Vector want = polyprod_point(p, w, ei, ej);
                CHECK((got - want).cwiseAbs().maxCoeff() <=
                      1e-13 * std::max(1.0, want.cwiseAbs().maxCoeff()));
                colsum += got;
            }
            Vector ej = Vector::Zero(d);
            ej(j) = 1.0;
            CHECK((colsum - ej).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("mult_matrix") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        const Index d = p.degree();
        const Complex w = random_complex(rng, 2.0);
        CHECK((mult_matrix(p, w, Vector::Ones(d)) - Matrix::Identity(d, d))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-14);
        const Vector a = random_vector(rng, d);
        CHECK((mult_matrix(p, {0.0, 0.0}, a) - Matrix(a.asDiagonal())).isZero(0.0));
        const Vector b = random_vector(rng, d);
        const Vector via_matrix = mult_matrix(p, w, a) * b;
        const Vector direct = polyprod_point(p, w, a, b);
        CHECK((via_matrix - direct).cwiseAbs().maxCoeff() <=
              1e-12 * std::max(1.0, direct.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("inverse_point") {
    std::mt19937_64 rng(31);
    const MonicPolynomial p01 = poly01();
    CHECK((inverse_point(p01, {0.5, 0.0}, Vector::Ones(2)) - Vector::Ones(2))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    // w = 0: entrywise reciprocal
    const Vector a0 = vec2({2.0, 0.0}, {0.0, 4.0});
    const Vector inv0 = inverse_point(p01, {0.0, 0.0}, a0);
    CHECK(std::abs(inv0(0) - Complex(0.5, 0.0)) <= 1e-14);
    CHECK(std::abs(inv0(1) - Complex(0.0, -0.25)) <= 1e-14);

    for (int trial = 0; trial < 50; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        const Index d = p.degree();
        const Complex w = random_complex(rng, 1.0);
        // ones + small perturbation stays comfortably invertible
        const Vector a = Vector::Ones(d) + 0.3 * random_vector(rng, d);
        const Vector inv = inverse_point(p, w, a);
        CHECK((polyprod_point(p, w, a, inv) - Vector::Ones(d)).cwiseAbs().maxCoeff() <=
              1e-9);
    }
    // singular: a with a zero entry at w = 0 is not invertible
    CHECK_THROWS_AS(inverse_point(p01, {0.0, 0.0}, vec2({1.0, 0.0}, {0.0, 0.0})),
                    NotInvertible);
}

TEST_CASE("power_point") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const MonicPolynomial p = random_poly(rng, 2 + trial % 5);
        const Index d = p.degree();
        const Complex w = random_complex(rng, 1.0);
        const Vector a = random_vector(rng, d);
        CHECK((power_point(p, w, a, 0) - Vector::Ones(d)).isZero(0.0));
        CHECK((power_point(p, w, a, 1) - a).isZero(0.0));
        const Vector aa = polyprod_point(p, w, a, a);
        const Vector left = polyprod_point(p, w, a, aa);
        const Vector right = polyprod_point(p, w, aa, a);
        const double scale = std::max(1.0, left.cwiseAbs().maxCoeff());
        CHECK((left - right).cwiseAbs().maxCoeff() <= 1e-10 * scale);
        CHECK((power_point(p, w, a, 3) - left).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    }
}
