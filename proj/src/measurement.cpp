#include "zeno/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "zeno/dynamics.hpp"
#include "zeno/errors.hpp"
#include "zeno/format.hpp"

namespace zeno {

namespace {

Matrix2 projector_matrix(const MeasurementDirection& dir, Sign sign) {
    const auto [plus, minus] = direction_eigenstates(dir);
    return projector_onto(sign == Sign::Plus ? plus : minus);
}

double rate_scale(const BathParams& p) { return p.gamma() * (2.0 * p.n() + 1.0); }

} // namespace

Projector::Projector(const MeasurementDirection& dir, Sign sign)
    : dir_(dir), sign_(sign), m_(projector_matrix(dir, sign)) {}

Projector projector(const MeasurementDirection& dir, Sign sign) { return {dir, sign}; }

Matrix2 dephase(const MeasurementDirection& dir, const Matrix2& rho) {
    const Matrix2 p = projector_matrix(dir, Sign::Plus);
    const Matrix2 q = Matrix2::identity() - p;
    return p * rho * p + q * rho * q;
}

Matrix2 measured_liouvillian(const BathParams& p, const MeasurementDirection& dir, const Matrix2& rho) {
    const Matrix2 proj = projector_matrix(dir, Sign::Plus);
    const Matrix2 q = Matrix2::identity() - proj;
    const Matrix2 l = liouvillian_expanded(p, rho);
    return proj * l * proj + q * l * q;
}

double decay_exponent_closed_form(const BathParams& p, const MeasurementDirection& dir) {
    const auto [x, y, z] = dir.unit_vector();
    const double g = p.gamma();
    const double n = p.n();
    const double m = p.m();
    const double cp = std::cos(p.psi());
    const double sp = std::sin(p.psi());
    return -0.5 * g * (n + 1.0) * (z + z * z + 0.5 * x * x + 0.5 * y * y) +
           0.5 * g * n * (z - z * z - 0.5 * x * x - 0.5 * y * y) -
           0.5 * g * m * x * (cp * x - sp * y) + 0.5 * g * m * y * (sp * x + cp * y);
}

double diagonal_decay_element(const BathParams& p, const MeasurementDirection& dir, Sign sign) {
    const Matrix2 proj = projector_matrix(dir, sign);
    return (proj * liouvillian_expanded(p, proj)).trace().real();
}

double decay_exponent_F(const BathParams& p, const MeasurementDirection& dir) {
    const double closed = decay_exponent_closed_form(p, dir);
    const double direct = diagonal_decay_element(p, dir, Sign::Plus);
    if (std::abs(closed - direct) > 1e-12 * std::max(1.0, rate_scale(p)))
        throw NumericError("decay_exponent_F: closed form " + std::to_string(closed) +
                           " disagrees with superoperator element " + std::to_string(direct));
    return closed;
}

double survival_probability(const BathParams& p, const MeasurementDirection& dir, double t) {
    if (!(t >= 0.0)) throw DomainError("survival_probability: t must be >= 0");
    return std::min(1.0, std::exp(decay_exponent_F(p, dir) * t));
}

bool total_zeno_condition(const BathParams& p, const MeasurementDirection& dir, double tol) {
    if (!(tol > 0.0)) throw DomainError("total_zeno_condition: tol must be > 0");
    return std::abs(decay_exponent_F(p, dir)) < tol * p.gamma();
}

namespace {

Sign majority_sign(const MeasurementDirection& dir, const Matrix2& rho) {
    const double plus = (projector_matrix(dir, Sign::Plus) * rho).trace().real();
    return plus >= 0.5 ? Sign::Plus : Sign::Minus;
}

MeasuredSample decorate(double t, const Matrix2& rho, const Matrix2& sigma_mu, double survival) {
    const DensityMatrix dm(rho, 1e-10, 1e-6, 1e-6);
    return {t, density_to_bloch(dm), (sigma_mu * rho).trace().real(), survival};
}

} // namespace

MeasuredSeries monitored_evolution(const BathParams& p, const MeasurementDirection& dir,
                                   const DensityMatrix& rho0, double t_max, double dt) {
    const Sign tracked = majority_sign(dir, rho0.matrix());
    const Matrix2 pi = projector_matrix(dir, tracked);
    const double initial = (pi * rho0.matrix()).trace().real();
    const double rate = diagonal_decay_element(p, dir, tracked);
    const Matrix2 sigma_mu = spin_direction_operator(dir);

    const TimeSeries run = integrate(SuperoperatorForm::measured(dir), p, rho0, t_max, dt);
    MeasuredSeries out{{}, run.dt, dir, tracked};
    out.samples.reserve(run.samples.size());
    for (const auto& s : run.samples) {
        const Matrix2 rho = bloch_to_density(s.bloch).matrix();
        out.samples.push_back(decorate(s.t, rho, sigma_mu, std::min(1.0, initial * std::exp(rate * s.t))));
    }
    return out;
}

MeasuredSeries discrete_zeno_protocol(const BathParams& p, const MeasurementDirection& dir,
                                      const DensityMatrix& rho0, double delta_t, long n_steps) {
    if (!(delta_t > 0.0)) throw DomainError("discrete_zeno_protocol: delta_t must be > 0");
    if (n_steps < 1) throw DomainError("discrete_zeno_protocol: n_steps must be >= 1");

    const Sign tracked = majority_sign(dir, rho0.matrix());
    const Matrix2 pi = projector_matrix(dir, tracked);
    const Matrix2 sigma_mu = spin_direction_operator(dir);
    const auto free = SuperoperatorForm::expanded();

    Matrix2 ensemble = rho0.matrix();
    double survival = (pi * ensemble).trace().real();
    // Normalized state conditioned on every outcome so far matching `tracked`.
    Matrix2 conditioned = (pi * ensemble * pi) / survival;

    MeasuredSeries out{{}, delta_t, dir, tracked};
    out.samples.reserve(static_cast<std::size_t>(n_steps) + 1);
    out.samples.push_back(decorate(0.0, ensemble, sigma_mu, survival));

    for (long k = 1; k <= n_steps; ++k) {
        ensemble = dephase(dir, integrate_state(free, p, DensityMatrix(ensemble, 1e-10, 1e-6, 1e-6),
                                                delta_t).final_state.matrix());
        if (survival > 0.0) {
            const Matrix2 evolved =
                integrate_state(free, p, DensityMatrix(conditioned, 1e-10, 1e-6, 1e-6), delta_t)
                    .final_state.matrix();
            const Matrix2 kept = pi * evolved * pi;
            const double stay = kept.trace().real();
            survival *= stay;
            if (stay > 0.0) conditioned = kept / stay;
            else survival = 0.0;
        }
        out.samples.push_back(decorate(static_cast<double>(k) * delta_t, ensemble, sigma_mu, survival));
    }
    return out;
}

DensityMatrix steady_state_under_measurement(const BathParams& p, const MeasurementDirection& dir) {
    const Matrix2 plus = projector_matrix(dir, Sign::Plus);
    const Matrix2 minus = projector_matrix(dir, Sign::Minus);
    // Population rate equation dp+/dt = -down p+ + up p-.
    const double down = -(plus * liouvillian_expanded(p, plus)).trace().real();
    const double up = (plus * liouvillian_expanded(p, minus)).trace().real();
    const double total = up + down;
    if (!(total > 1e-14 * p.gamma()))
        throw NumericError("steady_state_under_measurement: degenerate generator (no unique fixed point)");
    const double p_plus = std::clamp(up / total, 0.0, 1.0);
    return DensityMatrix(Complex(p_plus) * plus + Complex(1.0 - p_plus) * minus);
}

void write_csv(std::ostream& out, const MeasuredSeries& series) {
    out << "t,rx,ry,rz,sigma_mu_mean,survival\n";
    for (const auto& s : series.samples) {
        out << format_number(s.t) << ',' << format_number(s.bloch.x) << ',' << format_number(s.bloch.y)
            << ',' << format_number(s.bloch.z) << ',' << format_number(s.sigma_mu_mean) << ','
            << format_number(s.survival) << '\n';
    }
}

} // namespace zeno
