#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zeno/bath.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

namespace {

bool near(const Matrix2& a, const Matrix2& b, double tol) { return max_abs_diff(a, b) < tol; }

BathParams to_params(const oracle::Bath& b) { return {b.gamma, b.n, b.psi}; }

} // namespace

TEST_CASE("BathParams validation and derived quantities") {
    CHECK_THROWS_AS(BathParams(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(BathParams(1.0, -0.1, 0.0), DomainError);
    CHECK_THROWS_AS(BathParams(1.0, 1.0, 2.0 * kPi), DomainError);
    CHECK_THROWS_AS(BathParams(1.0, 1.0, -0.1), DomainError);
    CHECK_THROWS_AS(BathParams(1.0, NAN, 0.0), DomainError);

    const BathParams vac(1.0, 0.0, 0.0);
    CHECK(vac.m() == 0.0);
    CHECK(vac.squeeze_r() == 0.0);

    for (const double n : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const BathParams p(1.0, n, 0.3);
        CHECK(std::abs(p.m() * p.m() - n * (n + 1.0)) < 1e-12 * std::max(1.0, n * (n + 1.0)));
        CHECK(std::abs(p.cosh_r() * p.cosh_r() - p.sinh_r() * p.sinh_r() - 1.0) < 1e-12);
        CHECK(std::abs(std::cosh(p.squeeze_r()) - p.cosh_r()) < 1e-12 * p.cosh_r());
        CHECK(std::abs(p.alpha() - std::exp(2.0 * p.squeeze_r())) < 1e-10 * p.alpha());
    }
}

TEST_CASE("lindblad_operator examples") {
    CHECK(near(lindblad_operator({1.0, 0.0, 0.0}), pauli::sigma_minus(), 1e-15));
    // Index 0 is the excited state, so sigma_- = |-><+| sits at (1,0).
    const double r2 = std::sqrt(2.0);
    CHECK(near(lindblad_operator({1.0, 1.0, 0.0}), Matrix2(0, -1, r2, 0), 1e-15));
    CHECK(near(lindblad_operator({1.0, 1.0, kPi}), Matrix2(0, 1, r2, 0), 1e-15));
}

TEST_CASE("the two written forms of S agree") {
    oracle::Sampler s(201);
    for (int i = 0; i < 200; ++i) {
        const auto b = s.bath();
        const BathParams p = to_params(b);
        // sqrt(N+1) sigma_- - sqrt(N) e^{i psi} sigma_+
        const Matrix2 expected{0.0, -std::sqrt(b.n) * std::polar(1.0, b.psi), std::sqrt(b.n + 1.0), 0.0};
        CHECK(near(lindblad_operator(p), expected, 1e-12));
        const Matrix2 via_r = std::cosh(p.squeeze_r()) * pauli::sigma_minus() -
                              std::sinh(p.squeeze_r()) * std::polar(1.0, b.psi) * pauli::sigma_plus();
        CHECK(near(lindblad_operator(p), via_r, 1e-12 * std::max(1.0, b.n)));
    }
}

TEST_CASE("eigenvalues of S are +-i sqrt(M) e^{i psi/2}") {
    oracle::Sampler s(202);
    for (int i = 0; i < 200; ++i) {
        const BathParams p = to_params(s.bath_positive());
        const auto e = eigensystem_2x2(lindblad_operator(p));
        const Complex lp = lambda_plus(p);
        CHECK(std::abs(lp - kI * std::sqrt(p.m()) * std::polar(1.0, 0.5 * p.psi())) < 1e-15);
        const bool first = std::abs(e[0].value - lp) < std::abs(e[0].value + lp);
        CHECK(std::abs((first ? e[0] : e[1]).value - lp) < 1e-10);
        CHECK(std::abs((first ? e[1] : e[0]).value + lp) < 1e-10);
    }
}

TEST_CASE("rotated quadrature operators") {
    using namespace pauli;
    const auto q0 = rotated_quadrature_operators({1.0, 1.0, 0.0});
    CHECK(near(q0.j1, spin_x(), 1e-15));
    CHECK(near(q0.j2, spin_y(), 1e-15));
    const auto qpi = rotated_quadrature_operators({1.0, 1.0, kPi});
    CHECK(near(qpi.j1, -spin_y(), 1e-15));
    CHECK(near(qpi.j2, spin_x(), 1e-15));
    const double h = 1.0 / std::sqrt(2.0);
    const auto qh = rotated_quadrature_operators({1.0, 1.0, kPi / 2});
    CHECK(near(qh.j1, h * (spin_x() - spin_y()), 1e-15));
    CHECK(near(qh.j2, h * (spin_x() + spin_y()), 1e-15));

    oracle::Sampler s(203);
    for (int i = 0; i < 200; ++i) {
        const auto q = rotated_quadrature_operators(to_params(s.bath()));
        CHECK(near(commutator(q.j1, q.j2), kI * spin_z(), 1e-12));
        CHECK(near(q.j1 * q.j1, 0.25 * Matrix2::identity(), 1e-12));
        CHECK(near(q.j2 * q.j2, 0.25 * Matrix2::identity(), 1e-12));
    }
}

TEST_CASE("jminus_alpha") {
    CHECK_THROWS_AS(jminus_alpha({1.0, 0.0, 0.0}), DomainError);

    const BathParams p(1.0, 1.0, 0.0);
    const Complex lp(0.0, std::pow(2.0, 0.25));
    CHECK(near(jminus_alpha(p), lindblad_operator(p) / (2.0 * lp), 1e-12));

    oracle::Sampler s(204);
    for (int i = 0; i < 100; ++i) {
        const BathParams q = to_params(s.bath_positive());
        const auto e = eigensystem_2x2(jminus_alpha(q));
        CHECK(std::abs(e[0].value * e[0].value - 0.25) < 1e-10);
        CHECK(std::abs(e[0].value + e[1].value) < 1e-10);
    }

    const Matrix2 big = jminus_alpha({1.0, 100.0, 1.0});
    CHECK(big.is_finite());
    CHECK(big.max_abs() < 100.0);
}
