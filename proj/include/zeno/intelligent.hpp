// intelligent.hpp: eigenstates of the bath's jump operator and their
// uncertainty structure with respect to the rotated quadrature spins J1, J2

#pragma once

#include <vector>

#include "zeno/algebra.hpp"
#include "zeno/bath.hpp"

namespace zeno {

struct IntelligentStateReport {
    StateVector2 state;
    Complex eigenvalue; // of S
    double var_j1;
    double var_j2;
    double jz_mean;
    // |var_J1 var_J2 - <Jz>^2 / 4|
    double saturation_residual;
};

// Variances of J1, J2 and <Jz> for an arbitrary pure state.
IntelligentStateReport uncertainty_report(const BathParams& p, const StateVector2& state,
                                          Complex eigenvalue = {});

struct IntelligentStatePair {
    IntelligentStateReport first;  // |+> along the first optimal direction
    IntelligentStateReport second; // |+> along the second optimal direction
};

// Eigenpairs of S, identified with the closed-form states
// sqrt(N/(N+M)) |+> +- i sqrt(M/(N+M)) e^{-i psi/2} |->. The "+" state has
// eigenvalue -i sqrt(M) e^{i psi/2}, the "-" state +i sqrt(M) e^{i psi/2}.
// Throws DefectiveMatrixError for N = 0 and NumericError if an eigen
// residual or the closed-form match exceeds 1e-10.
IntelligentStatePair eigenstates_of_S(const BathParams& p);

// U = exp(i pi Jz / 2) exp(beta_r Jz) exp(i psi Jz / 2) exp(-i pi Jy / 2),
// exp(beta_r) = (N / (N + 1))^{1/4}. Non-unitary; det U = 1. Verifies
// S = 2 i sqrt(M) e^{i psi/2} U Jz U^-1 within 1e-10 (NumericError otherwise).
// Throws DomainError for N = 0.
Matrix2 disentangling_transform_U(const BathParams& p);

struct DisentangledStates {
    StateVector2 from_plus;  // normalized U|+>
    StateVector2 from_minus; // normalized U|->
};
DisentangledStates disentangled_states(const BathParams& p);

struct QuadratureCurves {
    std::vector<double> t;
    std::vector<double> j1;            // closed-form <J1>(t)
    std::vector<double> j2;            // closed-form <J2>(t)
    std::vector<double> j1_integrated; // RK4 cross-check
    std::vector<double> j2_integrated;
    double max_deviation;
};

// Closed-form quadrature decay laws on t_grid, cross-checked against an RK4
// trajectory at step <= 1e-3 / gamma. Throws NumericError if the deviation
// reaches 1e-6, DomainError for a decreasing or negative grid.
QuadratureCurves quadrature_decay_curves(const BathParams& p, const BlochVector& b0,
                                         const std::vector<double>& t_grid);

// d<sigma_mu1>/dt at t = 0 of the unmeasured evolution from rho0, via
// sigma_mu1 = 2 sin(theta) J2 + 2 cos(theta) Jz.
double sigma_mu1_initial_slope(const BathParams& p, const BlochVector& rho0);

// The same slope for the initial state |+>_mu1; throws NumericError if it is
// not zero within 1e-10 gamma.
double initial_slope_check(const BathParams& p);

} // namespace zeno
