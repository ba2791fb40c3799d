// dynamics.hpp: unmeasured and monitored evolution of the two-level system
//
// Interaction picture, hbar = 1. Every generator here is a linear map on 2x2
// operators; it is applied to RK4 intermediate stages that are not exactly
// density matrices, hence the Matrix2 signatures.

#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "zeno/algebra.hpp"
#include "zeno/bath.hpp"

namespace zeno {

// Squeezed-vacuum Liouvillian written term by term in sigma_+ and sigma_-.
Matrix2 liouvillian_expanded(const BathParams& p, const Matrix2& rho);

// The same generator as a single-jump dissipator (gamma/2)(2 S rho S+ - {S+ S, rho}).
Matrix2 liouvillian_lindblad(const BathParams& p, const Matrix2& rho);

// Closed-form Bloch vector of the unmeasured evolution at time t >= 0.
BlochVector analytic_bloch(const BathParams& p, const BlochVector& b0, double t);

enum class FormKind { Expanded, Lindblad, Measured };

// Selects the right-hand side of d(rho)/dt.
struct SuperoperatorForm {
    FormKind kind = FormKind::Expanded;
    std::optional<MeasurementDirection> direction; // set iff kind == Measured

    static SuperoperatorForm expanded() { return {FormKind::Expanded, std::nullopt}; }
    static SuperoperatorForm lindblad() { return {FormKind::Lindblad, std::nullopt}; }
    static SuperoperatorForm measured(const MeasurementDirection& dir) { return {FormKind::Measured, dir}; }
};

Matrix2 apply_generator(const SuperoperatorForm& form, const BathParams& p, const Matrix2& rho);

struct TimeSample {
    double t;
    BlochVector bloch;
};

struct TimeSeries {
    std::vector<TimeSample> samples;
    double dt;
    BathParams bath;
    SuperoperatorForm form;
    BlochVector initial;

    const TimeSample& back() const { return samples.back(); }
};

inline constexpr double kDefaultDt = 1e-3;

struct IntegrationResult {
    TimeSeries series;
    DensityMatrix final_state;
};

// Fixed-step classical RK4 on [0, t_max]. The step count is round(t_max / dt)
// (at least one) and the effective step t_max / steps is stored in the series.
// For the Measured form the initial state is dephased in the measurement
// basis first. Throws NumericError when a step leaves the state manifold by
// more than 1e-6 in trace or minimum eigenvalue.
IntegrationResult integrate_state(const SuperoperatorForm& form, const BathParams& p,
                                  const DensityMatrix& rho0, double t_max, double dt = kDefaultDt);

TimeSeries integrate(const SuperoperatorForm& form, const BathParams& p, const DensityMatrix& rho0,
                     double t_max, double dt = kDefaultDt);

// CSV with header "t,rx,ry,rz".
void write_csv(std::ostream& out, const TimeSeries& series);

} // namespace zeno
