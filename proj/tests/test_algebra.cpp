#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zeno/algebra.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

namespace {

bool near(const Matrix2& a, const Matrix2& b, double tol) { return max_abs_diff(a, b) < tol; }

bool near_c(Complex a, Complex b, double tol) { return std::abs(a - b) < tol; }

} // namespace

TEST_CASE("pauli algebra closes exactly") {
    using namespace pauli;
    CHECK(max_abs_diff(sigma_x() * sigma_y(), kI * sigma_z()) == 0.0);
    CHECK(max_abs_diff(sigma_y() * sigma_z(), kI * sigma_x()) == 0.0);
    CHECK(max_abs_diff(sigma_z() * sigma_x(), kI * sigma_y()) == 0.0);
    CHECK(max_abs_diff(sigma_x() * sigma_x(), Matrix2::identity()) == 0.0);
    CHECK(near(sigma_plus(), Matrix2(0, 1, 0, 0), 1e-15));
    CHECK(near(sigma_minus(), Matrix2(0, 0, 1, 0), 1e-15));
    CHECK(near(commutator(spin_x(), spin_y()), kI * spin_z(), 1e-15));
}

TEST_CASE("matrix helpers") {
    const Matrix2 a{1.0, Complex(2, 1), Complex(0, -1), 3.0};
    CHECK(near(a * a.inverse(), Matrix2::identity(), 1e-14));
    CHECK(near_c(a.determinant(), Complex(3.0, 0) - Complex(2, 1) * Complex(0, -1), 1e-15));
    CHECK(a.adjoint()(0, 1) == std::conj(a(1, 0)));
    CHECK_FALSE(a.is_hermitian(1e-12));
    CHECK(pauli::sigma_y().is_hermitian(0.0));
    CHECK_THROWS_AS(Matrix2(1, 1, 1, 1).inverse(), NumericError);
}

TEST_CASE("state vectors are normalized with a canonical phase") {
    const StateVector2 v(Complex(0, 3), 4.0);
    CHECK(std::abs(v.up() - 0.6) < 1e-15);
    CHECK(std::abs(v.down() - Complex(0, -0.8)) < 1e-15);
    const StateVector2 w(0.0, Complex(0, -2));
    CHECK(std::abs(w.down() - 1.0) < 1e-15);
    CHECK_THROWS_AS(StateVector2(0.0, 0.0), DomainError);
    CHECK(same_ray(StateVector2(1.0, kI), StateVector2(kI, -1.0), 1e-14));
}

TEST_CASE("bloch_to_density examples") {
    CHECK(near(bloch_to_density({0, 0, 0}).matrix(), Matrix2(0.5, 0, 0, 0.5), 1e-15));
    CHECK(near(bloch_to_density({0, 0, 1}).matrix(), Matrix2(1, 0, 0, 0), 1e-15));
    CHECK(near(bloch_to_density({1, 0, 0}).matrix(), Matrix2(0.5, 0.5, 0.5, 0.5), 1e-15));
    CHECK_THROWS_AS(bloch_to_density({0, 0, 1.00001}), DomainError);
    CHECK_NOTHROW(bloch_to_density({0, 0, 1.0000005}));
}

TEST_CASE("density_to_bloch examples") {
    const auto mixed = density_to_bloch(DensityMatrix::maximally_mixed());
    CHECK(mixed.norm() < 1e-15);
    const auto g = density_to_bloch(DensityMatrix::pure(StateVector2::ground()));
    CHECK(std::abs(g.z + 1.0) < 1e-15);
    const auto y = density_to_bloch(DensityMatrix(Matrix2(0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5)));
    CHECK(std::abs(y.x) < 1e-15);
    CHECK(std::abs(y.y - 1.0) < 1e-15);
    CHECK(std::abs(y.z) < 1e-15);
}

TEST_CASE("DensityMatrix rejects invalid input") {
    CHECK_THROWS_AS(DensityMatrix(Matrix2(0.5, 0.1, 0.2, 0.5)), DomainError);
    CHECK_THROWS_AS(DensityMatrix(Matrix2(0.6, 0, 0, 0.5)), DomainError);
    CHECK_THROWS_AS(DensityMatrix(Matrix2(1.5, 0, 0, -0.5)), DomainError);
}

TEST_CASE("round trip through the density matrix on random Bloch vectors") {
    oracle::Sampler s(101);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto v = s.bloch_ball();
        const BlochVector b{v[0], v[1], v[2]};
        worst = std::max(worst, distance(density_to_bloch(bloch_to_density(b)), b));
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("spin_direction_operator") {
    CHECK(near(spin_direction_operator({0, 0}), pauli::sigma_z(), 1e-15));
    CHECK(near(spin_direction_operator({kPi / 2, 0}), pauli::sigma_x(), 1e-15));
    CHECK(near(spin_direction_operator({kPi / 2, kPi / 2}), pauli::sigma_y(), 1e-15));

    oracle::Sampler s(102);
    for (int i = 0; i < 500; ++i) {
        const MeasurementDirection d(s.theta(), s.phi());
        const Matrix2 op = spin_direction_operator(d);
        CHECK(near(op * op, Matrix2::identity(), 1e-12));
        const auto u = d.unit_vector();
        CHECK(std::abs(u.norm() - 1.0) < 1e-14);
    }
}

TEST_CASE("direction_eigenstates") {
    const auto z = direction_eigenstates({0, 0});
    CHECK(same_ray(z.plus, StateVector2::excited(), 1e-15));
    CHECK(same_ray(z.minus, StateVector2::ground(), 1e-15));

    const auto south = direction_eigenstates({kPi, 0});
    CHECK(same_ray(south.plus, StateVector2::ground(), 1e-15));
    CHECK(same_ray(south.minus, StateVector2::excited(), 1e-15));

    const double h = 1.0 / std::sqrt(2.0);
    const auto x = direction_eigenstates({kPi / 2, 0});
    CHECK(same_ray(x.plus, StateVector2(h, h), 1e-15));
    CHECK(same_ray(x.minus, StateVector2(-h, h), 1e-15));

    oracle::Sampler s(103);
    for (int i = 0; i < 500; ++i) {
        const MeasurementDirection d(s.theta(), s.phi());
        const auto e = direction_eigenstates(d);
        CHECK(std::abs(inner(e.plus, e.minus)) < 1e-12);
        const Matrix2 op = spin_direction_operator(d);
        const auto vp = apply(op, e.plus);
        const auto vm = apply(op, e.minus);
        CHECK(std::abs(vp[0] - e.plus.up()) + std::abs(vp[1] - e.plus.down()) < 1e-12);
        CHECK(std::abs(vm[0] + e.minus.up()) + std::abs(vm[1] + e.minus.down()) < 1e-12);
    }
}

TEST_CASE("MeasurementDirection canonicalization") {
    CHECK_THROWS_AS(MeasurementDirection(-0.1, 0), DomainError);
    CHECK_THROWS_AS(MeasurementDirection(kPi + 0.1, 0), DomainError);
    CHECK(MeasurementDirection(kPi, 1.0).phi() == 0.0);
    CHECK(std::abs(MeasurementDirection(1.0, -kPi / 2).phi() - 1.5 * kPi) < 1e-15);
    const auto f = MeasurementDirection::folded(-0.5, 0.2);
    CHECK(std::abs(f.theta() - 0.5) < 1e-15);
    CHECK(std::abs(f.phi() - (0.2 + kPi)) < 1e-15);
}

TEST_CASE("expectation examples") {
    CHECK(expectation(pauli::sigma_z(), DensityMatrix::pure(StateVector2::excited())) == doctest::Approx(1.0));
    CHECK(std::abs(expectation(pauli::sigma_z(), DensityMatrix::maximally_mixed())) < 1e-15);
    CHECK(std::abs(expectation(pauli::sigma_x(), bloch_to_density({0.3, 0, 0})) - 0.3) < 1e-15);
    CHECK_THROWS_AS(expectation(pauli::sigma_plus(), DensityMatrix::maximally_mixed()), DomainError);
}

TEST_CASE("eigensystem_2x2 examples") {
    const auto z = eigensystem_2x2(pauli::sigma_z());
    CHECK(near_c(z[0].value, 1.0, 1e-15));
    CHECK(same_ray(z[0].vector, StateVector2::excited(), 1e-15));
    CHECK(near_c(z[1].value, -1.0, 1e-15));
    CHECK(same_ray(z[1].vector, StateVector2::ground(), 1e-15));

    const auto x = eigensystem_2x2(pauli::sigma_x());
    CHECK(near_c(x[0].value, 1.0, 1e-15));
    CHECK(same_ray(x[0].vector, StateVector2(1.0, 1.0), 1e-15));
    CHECK(near_c(x[1].value, -1.0, 1e-15));

    CHECK_THROWS_AS(eigensystem_2x2(Matrix2(0, 1, 0, 0)), DefectiveMatrixError);
    const auto id = eigensystem_2x2(Matrix2::identity());
    CHECK(std::abs(inner(id[0].vector, id[1].vector)) < 1e-15);
}

TEST_CASE("eigensystem_2x2 residuals on random matrices") {
    oracle::Sampler s(104);
    for (int i = 0; i < 500; ++i) {
        const Matrix2 a{Complex(s.uniform(-1, 1), s.uniform(-1, 1)), Complex(s.uniform(-1, 1), s.uniform(-1, 1)),
                        Complex(s.uniform(-1, 1), s.uniform(-1, 1)), Complex(s.uniform(-1, 1), s.uniform(-1, 1))};
        const auto e = eigensystem_2x2(a);
        CHECK(e[0].value.real() >= e[1].value.real() - 1e-12);
        CHECK(near_c(e[0].value + e[1].value, a.trace(), 1e-12));
        CHECK(near_c(e[0].value * e[1].value, a.determinant(), 1e-12));
        for (const auto& pair : e) {
            const auto v = apply(a, pair.vector);
            CHECK(std::abs(v[0] - pair.value * pair.vector.up()) + std::abs(v[1] - pair.value * pair.vector.down()) <
                  1e-11);
        }
    }
}

TEST_CASE("trace distance is half the Bloch distance") {
    const auto a = bloch_to_density({0, 0, 1});
    const auto b = bloch_to_density({0, 0, -1});
    CHECK(trace_distance(a, b) == doctest::Approx(1.0));
    CHECK(trace_distance(a, a) == 0.0);
}
