#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "esst/algebra.hpp"
#include "oracles.hpp"

using namespace esst;

namespace {

double unitarity_error(const ComplexMatrix3& u) {
    return (u.adjoint() * u - ComplexMatrix3::identity()).max_abs();
}

} // namespace

TEST_CASE("su2 generators match the printed matrices") {
    const auto k = su2_generators();
    const Complex o = 0.0, l = 1.0;
    CHECK(k.kx == ComplexMatrix3({o, l, o, l, o, o, o, o, o}));
    CHECK(k.ky == ComplexMatrix3({o, o, o, o, o, l, o, l, o}));
    CHECK(k.kz == ComplexMatrix3({o, o, -kI, o, o, o, kI, o, o}));
    CHECK(k.kx.hermiticity_error() == 0.0);
    CHECK(k.ky.hermiticity_error() == 0.0);
    CHECK(k.kz.hermiticity_error() == 0.0);
    CHECK(k.kx == k.kx.adjoint());
    CHECK(k.kz == k.kz.adjoint());
}

TEST_CASE("su2 commutation relations hold exactly") {
    const auto k = su2_generators();
    CHECK(commutator(k.kx, k.ky) == kI * k.kz);
    CHECK(commutator(k.ky, k.kz) == kI * k.kx);
    CHECK(commutator(k.kz, k.kx) == kI * k.ky);
}

TEST_CASE("hermitian_expm of the zero matrix is the identity") {
    for (double s : {0.0, 1.0, -3.5, 10.0}) CHECK(hermitian_expm(ComplexMatrix3{}, s) == ComplexMatrix3::identity());
}

TEST_CASE("hermitian_expm of Kx is a Rabi rotation in the {1,2} block") {
    const auto k = su2_generators();
    for (double s : {0.3, 1.0, std::numbers::pi, 7.25}) {
        // exp(-i s Kx) = [[cos s, -i sin s, 0], [-i sin s, cos s, 0], [0, 0, 1]]
        ComplexMatrix3 expected = ComplexMatrix3::identity();
        expected(0, 0) = expected(1, 1) = std::cos(s);
        expected(0, 1) = expected(1, 0) = Complex(0.0, -std::sin(s));
        CHECK((hermitian_expm(k.kx, s) - expected).max_abs() < 1e-14);
    }
    const ComplexVector3 half = hermitian_expm(k.kx, std::numbers::pi / 2.0) * ComplexVector3::basis(0);
    CHECK(std::abs(half[1] + kI) < 1e-14);  // -i|2>
    const ComplexVector3 full = hermitian_expm(k.kx, std::numbers::pi) * ComplexVector3::basis(0);
    CHECK(std::abs(full[0] + 1.0) < 1e-14);  // -|1>
}

TEST_CASE("hermitian_expm is unitary and agrees with a Taylor-series oracle") {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> us(0.0, 10.0);
    double worst_unitarity = 0.0, worst_oracle = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix3 m = oracle::random_hermitian(rng);
        const double s = us(rng);
        const ComplexMatrix3 u = hermitian_expm(m, s);
        worst_unitarity = std::max(worst_unitarity, unitarity_error(u));
        worst_oracle = std::max(worst_oracle, (u - oracle::taylor_expm(m, s)).max_abs());
    }
    CHECK(worst_unitarity <= 1e-12);
    CHECK(worst_oracle <= 1e-11);
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const double scale = std::pow(10.0, trial % 7 - 3);
        const ComplexMatrix3 m = oracle::random_hermitian(rng, scale);
        const HermitianEigen e = hermitian_eigen(m);
        CHECK(e.values[0] <= e.values[1]);
        CHECK(e.values[1] <= e.values[2]);
        CHECK((e.reconstruct() - m).max_abs() <= 1e-10 * std::max(1.0, m.max_abs()));
        CHECK(unitarity_error(e.vectors) <= 1e-13);
    }
}

TEST_CASE("closed-form and Jacobi eigen routes agree") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix3 m = oracle::random_hermitian(rng, 2.0);
        const HermitianEigen a = hermitian_eigen(m);
        const HermitianEigen b = hermitian_eigen_jacobi(m);
        CHECK_FALSE(a.used_jacobi);
        CHECK(b.used_jacobi);
        for (std::size_t i = 0; i < 3; ++i) CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12).scale(1.0));
        CHECK((b.reconstruct() - m).max_abs() <= 1e-12);
    }
}

TEST_CASE("degenerate spectra fall back to Jacobi") {
    const ComplexMatrix3 scalar = Complex(2.5) * ComplexMatrix3::identity();
    const HermitianEigen e = hermitian_eigen(scalar);
    CHECK(e.used_jacobi);
    CHECK((e.reconstruct() - scalar).max_abs() < 1e-15);

    // doubly degenerate, rotated off the axes
    std::mt19937_64 rng(3);
    const ComplexMatrix3 v = hermitian_expm(oracle::random_hermitian(rng), 1.3);
    const ComplexMatrix3 m = v * ComplexMatrix3::diagonal({1.0, 1.0, -2.0}) * v.adjoint();
    const HermitianEigen d = hermitian_eigen(m);
    CHECK(d.used_jacobi);
    CHECK(d.values[0] == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(d.values[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(d.values[2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK((d.reconstruct() - m).max_abs() <= 1e-12);
    CHECK(unitarity_error(d.vectors) <= 1e-13);
    CHECK(unitarity_error(hermitian_expm(m, 4.0)) <= 1e-12);
}

TEST_CASE("nearly degenerate pair keeps orthonormal vectors") {
    std::mt19937_64 rng(11);
    const ComplexMatrix3 v = hermitian_expm(oracle::random_hermitian(rng), 0.7);
    for (double gap : {1e-3, 1e-6, 1e-7, 1e-9}) {
        const ComplexMatrix3 m = v * ComplexMatrix3::diagonal({0.0, gap, 1.0}) * v.adjoint();
        const HermitianEigen e = hermitian_eigen(m);
        CHECK((e.reconstruct() - m).max_abs() <= 1e-10);
        CHECK(unitarity_error(e.vectors) <= 1e-13);
    }
}

TEST_CASE("non-Hermitian input is rejected with the asymmetry") {
    ComplexMatrix3 m = su2_generators().kx;
    m(0, 1) = 1.5;
    CHECK_THROWS_AS(hermitian_expm(m, 1.0), NonHermitianError);
    try {
        hermitian_expm(m, 1.0);
    } catch (const NonHermitianError& e) {
        CHECK(e.asymmetry() == doctest::Approx(0.5));
    }
    CHECK_THROWS_AS(hermitian_eigen(m), NonHermitianError);

    // within tolerance is accepted
    ComplexMatrix3 near = su2_generators().ky;
    near(1, 2) += 1e-13;
    CHECK_NOTHROW(hermitian_expm(near, 1.0));
}

TEST_CASE("vector helpers") {
    const ComplexVector3 a{1.0, kI, 0.0};
    const ComplexVector3 b{0.0, 1.0, kI};
    const ComplexVector3 w = conj_cross(a, b);
    CHECK(std::abs(inner(a, w)) < 1e-15);
    CHECK(std::abs(inner(b, w)) < 1e-15);
    CHECK(a.norm2() == 2.0);
    CHECK(inner(a, a) == Complex(2.0));
}
