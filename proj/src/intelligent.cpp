#include "zeno/intelligent.hpp"

#include <cmath>
#include <string>

#include "zeno/directions.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/errors.hpp"

namespace zeno {

namespace {

double mean(const Matrix2& op, const StateVector2& v) {
    const auto w = apply(op, v);
    return (std::conj(v.up()) * w[0] + std::conj(v.down()) * w[1]).real();
}

// exp(a Jz) for complex a.
Matrix2 exp_jz(Complex a) { return {std::exp(0.5 * a), 0.0, 0.0, std::exp(-0.5 * a)}; }

// exp(-i pi Jy / 2), a rotation by pi/2 about y.
Matrix2 quarter_turn_y() {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, -h, h, h};
}

StateVector2 closed_form_state(const BathParams& p, double sign) {
    const double n = p.n();
    const double m = p.m();
    return {std::sqrt(n / (n + m)), sign * kI * std::sqrt(m / (n + m)) * std::polar(1.0, -0.5 * p.psi())};
}

StateVector2 normalized(const std::array<Complex, 2>& a) { return {a[0], a[1]}; }

} // namespace

IntelligentStateReport uncertainty_report(const BathParams& p, const StateVector2& state, Complex eigenvalue) {
    const auto [j1, j2] = rotated_quadrature_operators(p);
    const double m1 = mean(j1, state);
    const double m2 = mean(j2, state);
    const double jz = mean(pauli::spin_z(), state);
    // J1^2 = J2^2 = 1/4 for spin 1/2.
    const double var1 = 0.25 - m1 * m1;
    const double var2 = 0.25 - m2 * m2;
    return {state, eigenvalue, var1, var2, jz, std::abs(var1 * var2 - 0.25 * jz * jz)};
}

IntelligentStatePair eigenstates_of_S(const BathParams& p) {
    if (p.n() == 0.0)
        throw DefectiveMatrixError("eigenstates_of_S: S = sigma_- is defective for N = 0");
    const Matrix2 s = lindblad_operator(p);
    const auto pairs = eigensystem_2x2(s);

    const StateVector2 phi1 = closed_form_state(p, +1.0);
    const StateVector2 phi2 = closed_form_state(p, -1.0);
    const bool first_is_phi1 = std::abs(inner(phi1, pairs[0].vector)) >= std::abs(inner(phi1, pairs[1].vector));
    const Eigenpair& e1 = first_is_phi1 ? pairs[0] : pairs[1];
    const Eigenpair& e2 = first_is_phi1 ? pairs[1] : pairs[0];

    for (const Eigenpair* e : {&e1, &e2}) {
        const auto sv = apply(s, e->vector);
        const double residual = std::hypot(std::abs(sv[0] - e->value * e->vector.up()),
                                           std::abs(sv[1] - e->value * e->vector.down()));
        if (residual >= 1e-10)
            throw NumericError("eigenstates_of_S: eigen residual " + std::to_string(residual));
    }
    if (!same_ray(e1.vector, phi1, 1e-10) || !same_ray(e2.vector, phi2, 1e-10))
        throw NumericError("eigenstates_of_S: eigenvectors do not match the closed-form states");

    return {uncertainty_report(p, e1.vector, e1.value), uncertainty_report(p, e2.vector, e2.value)};
}

Matrix2 disentangling_transform_U(const BathParams& p) {
    if (p.n() == 0.0) throw DomainError("disentangling_transform_U: undefined for N = 0");
    const double beta_r = 0.25 * std::log(p.n() / (p.n() + 1.0));
    const Matrix2 u = exp_jz(Complex(0.0, 0.5 * kPi)) * exp_jz(beta_r) *
                      exp_jz(Complex(0.0, 0.5 * p.psi())) * quarter_turn_y();

    const Matrix2 rebuilt = 2.0 * lambda_plus(p) * (u * pauli::spin_z() * u.inverse());
    const double residual = max_abs_diff(rebuilt, lindblad_operator(p));
    if (residual >= 1e-10 * std::max(1.0, std::sqrt(p.n() + 1.0)))
        throw NumericError("disentangling_transform_U: S != 2 i sqrt(M) e^{i psi/2} U Jz U^-1 (residual " +
                           std::to_string(residual) + ")");
    return u;
}

DisentangledStates disentangled_states(const BathParams& p) {
    const Matrix2 u = disentangling_transform_U(p);
    return {normalized(apply(u, StateVector2::excited())), normalized(apply(u, StateVector2::ground()))};
}

QuadratureCurves quadrature_decay_curves(const BathParams& p, const BlochVector& b0,
                                         const std::vector<double>& t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
            throw DomainError("quadrature_decay_curves: time grid must be nonnegative and increasing");
    }
    const double c = std::cos(0.5 * p.psi());
    const double s = std::sin(0.5 * p.psi());
    const auto j1_of = [&](const BlochVector& b) { return 0.5 * (c * b.x - s * b.y); };
    const auto j2_of = [&](const BlochVector& b) { return 0.5 * (s * b.x + c * b.y); };
    const double fast = p.gamma() * (p.n() + p.m() + 0.5);
    const double slow = p.gamma() * (p.n() - p.m() + 0.5);

    QuadratureCurves out{t_grid, {}, {}, {}, {}, 0.0};
    DensityMatrix rho = bloch_to_density(b0);
    double t_prev = 0.0;
    for (const double t : t_grid) {
        out.j1.push_back(j1_of(b0) * std::exp(-fast * t));
        out.j2.push_back(j2_of(b0) * std::exp(-slow * t));
        if (t > t_prev) {
            const double span = t - t_prev;
            rho = integrate_state(SuperoperatorForm::expanded(), p, rho, span,
                                  std::min(span, kDefaultDt / p.gamma()))
                      .final_state;
            t_prev = t;
        }
        const BlochVector b = density_to_bloch(rho);
        out.j1_integrated.push_back(j1_of(b));
        out.j2_integrated.push_back(j2_of(b));
        out.max_deviation = std::max({out.max_deviation, std::abs(out.j1.back() - out.j1_integrated.back()),
                                      std::abs(out.j2.back() - out.j2_integrated.back())});
    }
    if (out.max_deviation >= 1e-6)
        throw NumericError("quadrature_decay_curves: RK4 cross-check deviates by " +
                           std::to_string(out.max_deviation));
    return out;
}

double sigma_mu1_initial_slope(const BathParams& p, const BlochVector& rho0) {
    const MeasurementDirection mu1 = optimal_directions(p).first;
    const double c = std::cos(0.5 * p.psi());
    const double s = std::sin(0.5 * p.psi());
    const double j2 = 0.5 * (s * rho0.x + c * rho0.y);
    const double jz = 0.5 * rho0.z;
    const double g = p.gamma();
    const double dj2 = -g * (p.n() - p.m() + 0.5) * j2;
    const double djz = 0.5 * (-g * (2.0 * p.n() + 1.0) * 2.0 * jz - g);
    return 2.0 * std::sin(mu1.theta()) * dj2 + 2.0 * std::cos(mu1.theta()) * djz;
}

double initial_slope_check(const BathParams& p) {
    const MeasurementDirection mu1 = optimal_directions(p).first;
    const double slope = sigma_mu1_initial_slope(p, mu1.unit_vector());
    if (std::abs(slope) >= 1e-10 * p.gamma())
        throw NumericError("initial_slope_check: d<sigma_mu1>/dt(0) = " + std::to_string(slope));
    return slope;
}

} // namespace zeno
