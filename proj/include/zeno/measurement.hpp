// measurement.hpp: frequent projective measurements of a fictitious spin component

#pragma once

#include <iosfwd>
#include <vector>

#include "zeno/algebra.hpp"
#include "zeno/bath.hpp"

namespace zeno {

enum class Sign { Plus, Minus };

class Projector {
public:
    Projector(const MeasurementDirection& dir, Sign sign);

    const MeasurementDirection& direction() const { return dir_; }
    Sign sign() const { return sign_; }
    const Matrix2& matrix() const { return m_; }

private:
    MeasurementDirection dir_;
    Sign sign_;
    Matrix2 m_;
};

Projector projector(const MeasurementDirection& dir, Sign sign);

// Nonselective measurement: rho -> P rho P + (1 - P) rho (1 - P).
Matrix2 dephase(const MeasurementDirection& dir, const Matrix2& rho);

// P L{rho} P + (1 - P) L{rho} (1 - P) with P the Plus projector of dir.
Matrix2 measured_liouvillian(const BathParams& p, const MeasurementDirection& dir, const Matrix2& rho);

// F(theta, phi) = <+|L{|+><+|}|+> for the direction's Plus eigenstate.
// Evaluates the Bloch-vector closed form and the direct superoperator
// element, throws NumericError if they disagree beyond 1e-12 (relative to
// the rate scale), and returns the closed form.
double decay_exponent_F(const BathParams& p, const MeasurementDirection& dir);
double decay_exponent_closed_form(const BathParams& p, const MeasurementDirection& dir);
// <s|L{|s><s|}|s> evaluated through liouvillian_expanded.
double diagonal_decay_element(const BathParams& p, const MeasurementDirection& dir, Sign sign);

// exp(F t) for a system prepared in |+>_mu. Throws DomainError for t < 0.
double survival_probability(const BathParams& p, const MeasurementDirection& dir, double t);

inline constexpr double kZenoTolerance = 1e-10;

// |F| < tol * gamma.
bool total_zeno_condition(const BathParams& p, const MeasurementDirection& dir,
                          double tol = kZenoTolerance);

struct MeasuredSample {
    double t;
    BlochVector bloch;     // ensemble (nonselective) state
    double sigma_mu_mean;  // <sigma_mu> in that state
    double survival;       // probability that every outcome so far equals the tracked sign
};

struct MeasuredSeries {
    std::vector<MeasuredSample> samples;
    double dt;
    MeasurementDirection direction;
    // Outcome whose survival is tracked: the sign carrying at least half of
    // the initial population.
    Sign tracked;
};

// Continuous monitoring: RK4 on the measured master equation from the
// dephased initial state. Survival is tr(Pi rho0) exp(<s|L{Pi}|s> t).
MeasuredSeries monitored_evolution(const BathParams& p, const MeasurementDirection& dir,
                                   const DensityMatrix& rho0, double t_max, double dt = 1e-3);

// Free evolution for delta_t followed by a projective measurement, repeated
// n_steps times. The ensemble state is updated nonselectively; survival is
// the exact probability that all n outcomes equal the tracked sign.
MeasuredSeries discrete_zeno_protocol(const BathParams& p, const MeasurementDirection& dir,
                                      const DensityMatrix& rho0, double delta_t, long n_steps);

// Fixed point of the measured master equation among states diagonal in the
// measurement basis. Throws NumericError if both transition rates vanish.
DensityMatrix steady_state_under_measurement(const BathParams& p, const MeasurementDirection& dir);

// CSV with header "t,rx,ry,rz,sigma_mu_mean,survival".
void write_csv(std::ostream& out, const MeasuredSeries& series);

} // namespace zeno
