// bath.hpp: broadband squeezed-vacuum parameters and the operators they define

#pragma once

#include "zeno/algebra.hpp"

namespace zeno {

// Squeezed bath with maximal correlation M = sqrt(N (N + 1)).
// gamma is the vacuum decay rate; all times are in units of 1/gamma.
class BathParams {
public:
    // Throws DomainError unless gamma > 0, N >= 0 and psi in [0, 2 pi).
    BathParams(double gamma, double n, double psi);

    double gamma() const { return gamma_; }
    double n() const { return n_; }
    double psi() const { return psi_; }
    double m() const { return m_; }

    // Squeeze amplitude r with cosh r = sqrt(N + 1), sinh r = sqrt(N).
    double squeeze_r() const { return r_; }
    double cosh_r() const;
    double sinh_r() const;
    // alpha = exp(2 r).
    double alpha() const;

private:
    double gamma_;
    double n_;
    double psi_;
    double m_;
    double r_;
};

// S = sqrt(N + 1) sigma_- - sqrt(N) e^{i psi} sigma_+.
Matrix2 lindblad_operator(const BathParams& p);

struct QuadraturePair {
    Matrix2 j1; // major axis of the noise ellipse (fast decay)
    Matrix2 j2; // minor axis (slow decay)
};

// J1 = cos(psi/2) Jx - sin(psi/2) Jy, J2 = sin(psi/2) Jx + cos(psi/2) Jy.
QuadraturePair rotated_quadrature_operators(const BathParams& p);

// (J1 - i alpha J2) / sqrt(1 - alpha^2) on the principal branch, so that
// S = 2 i sqrt(M) e^{i psi/2} J_-(alpha). Throws DomainError for N = 0.
Matrix2 jminus_alpha(const BathParams& p);

// i sqrt(M) e^{i psi/2}, the factor relating S to J_-(alpha).
Complex lambda_plus(const BathParams& p);

} // namespace zeno
