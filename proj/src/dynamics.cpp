#include "zeno/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "zeno/errors.hpp"
#include "zeno/format.hpp"
#include "zeno/measurement.hpp"

namespace zeno {

Matrix2 liouvillian_expanded(const BathParams& p, const Matrix2& rho) {
    const Matrix2 sp = pauli::sigma_plus();
    const Matrix2 sm = pauli::sigma_minus();
    const Matrix2 spsm = sp * sm;
    const Matrix2 smsp = sm * sp;
    const double g = p.gamma();
    const Complex squeeze = std::polar(g * p.m(), p.psi());

    Matrix2 out = Complex(0.5 * g * (p.n() + 1.0)) * (2.0 * sm * rho * sp - spsm * rho - rho * spsm);
    out += Complex(0.5 * g * p.n()) * (2.0 * sp * rho * sm - smsp * rho - rho * smsp);
    out -= squeeze * (sp * rho * sp);
    out -= std::conj(squeeze) * (sm * rho * sm);
    return out;
}

Matrix2 liouvillian_lindblad(const BathParams& p, const Matrix2& rho) {
    const Matrix2 s = lindblad_operator(p);
    const Matrix2 sd = s.adjoint();
    const Matrix2 sds = sd * s;
    return Complex(0.5 * p.gamma()) * (2.0 * s * rho * sd - rho * sds - sds * rho);
}

BlochVector analytic_bloch(const BathParams& p, const BlochVector& b0, double t) {
    if (!(t >= 0.0)) throw DomainError("analytic_bloch: t must be >= 0");
    const double g = p.gamma();
    const double n = p.n();
    const double slow = std::exp(-g * (n + 0.5 - p.m()) * t);
    const double fast = std::exp(-g * (n + 0.5 + p.m()) * t);
    const double relax = std::exp(-g * (2.0 * n + 1.0) * t);
    const double s = std::sin(0.5 * p.psi());
    const double c = std::cos(0.5 * p.psi());

    BlochVector b;
    b.x = (b0.x * s * s + b0.y * s * c) * slow + (b0.x * c * c - b0.y * s * c) * fast;
    b.y = (b0.y * c * c + b0.x * s * c) * slow + (b0.y * s * s - b0.x * s * c) * fast;
    b.z = b0.z * relax + (relax - 1.0) / (2.0 * n + 1.0);
    return b;
}

Matrix2 apply_generator(const SuperoperatorForm& form, const BathParams& p, const Matrix2& rho) {
    switch (form.kind) {
    case FormKind::Expanded: return liouvillian_expanded(p, rho);
    case FormKind::Lindblad: return liouvillian_lindblad(p, rho);
    case FormKind::Measured:
        if (!form.direction) throw DomainError("apply_generator: Measured form without a direction");
        return measured_liouvillian(p, *form.direction, rho);
    }
    throw DomainError("apply_generator: unknown form");
}

namespace {

constexpr double kStepTol = 1e-6;

void check_state(const Matrix2& rho, double t) {
    const double trace_dev = std::abs(rho.trace() - 1.0);
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double lo = 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(rho(0, 1)));
    if (!rho.is_finite() || trace_dev > kStepTol || lo < -kStepTol) {
        std::ostringstream msg;
        msg << "integrate: step rejected at t=" << t << " (trace deviation " << trace_dev
            << ", minimum eigenvalue " << lo << "); dt is too large";
        throw NumericError(msg.str());
    }
}

DensityMatrix accept(const Matrix2& rho) {
    // Hermitize the rounding residue only; trace and positivity are checked, not repaired.
    const Matrix2 h = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(h, DensityMatrix::kHermitianTol, kStepTol, kStepTol);
}

} // namespace

IntegrationResult integrate_state(const SuperoperatorForm& form, const BathParams& p,
                                  const DensityMatrix& rho0, double t_max, double dt) {
    if (!(dt > 0.0) || !(t_max > 0.0) || dt > t_max * (1.0 + 1e-12))
        throw DomainError("integrate: requires 0 < dt <= t_max");
    const long steps = std::max(1L, std::lround(t_max / dt));
    const double h = t_max / static_cast<double>(steps);

    Matrix2 rho = rho0.matrix();
    if (form.kind == FormKind::Measured) {
        if (!form.direction) throw DomainError("integrate: Measured form without a direction");
        rho = dephase(*form.direction, rho);
    }
    const auto f = [&](const Matrix2& r) { return apply_generator(form, p, r); };

    TimeSeries series{{}, h, p, form, density_to_bloch(rho0)};
    series.samples.reserve(static_cast<std::size_t>(steps) + 1);
    series.samples.push_back({0.0, density_to_bloch(accept(rho))});

    for (long k = 1; k <= steps; ++k) {
        const Matrix2 k1 = f(rho);
        const Matrix2 k2 = f(rho + (0.5 * h) * k1);
        const Matrix2 k3 = f(rho + (0.5 * h) * k2);
        const Matrix2 k4 = f(rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double t = static_cast<double>(k) * h;
        check_state(rho, t);
        series.samples.push_back({t, density_to_bloch(accept(rho))});
    }
    return {std::move(series), accept(rho)};
}

TimeSeries integrate(const SuperoperatorForm& form, const BathParams& p, const DensityMatrix& rho0,
                     double t_max, double dt) {
    return integrate_state(form, p, rho0, t_max, dt).series;
}

void write_csv(std::ostream& out, const TimeSeries& series) {
    out << "t,rx,ry,rz\n";
    for (const auto& s : series.samples) {
        out << format_number(s.t) << ',' << format_number(s.bloch.x) << ','
            << format_number(s.bloch.y) << ',' << format_number(s.bloch.z) << '\n';
    }
}

} // namespace zeno
