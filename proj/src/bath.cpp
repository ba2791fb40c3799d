#include "zeno/bath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

BathParams::BathParams(double gamma, double n, double psi) : gamma_(gamma), n_(n), psi_(psi) {
    if (!std::isfinite(gamma) || gamma <= 0.0) throw DomainError("BathParams: gamma must be > 0");
    if (!std::isfinite(n) || n < 0.0) throw DomainError("BathParams: N must be >= 0");
    if (!std::isfinite(psi) || psi < 0.0 || psi >= 2.0 * kPi)
        throw DomainError("BathParams: psi must lie in [0, 2 pi)");
    m_ = std::sqrt(n * (n + 1.0));
    r_ = std::asinh(std::sqrt(n));
}

double BathParams::cosh_r() const { return std::sqrt(n_ + 1.0); }
double BathParams::sinh_r() const { return std::sqrt(n_); }

double BathParams::alpha() const {
    const double e_r = cosh_r() + sinh_r();
    return e_r * e_r;
}

Matrix2 lindblad_operator(const BathParams& p) {
    return Complex(std::sqrt(p.n() + 1.0)) * pauli::sigma_minus() -
           std::sqrt(p.n()) * std::polar(1.0, p.psi()) * pauli::sigma_plus();
}

QuadraturePair rotated_quadrature_operators(const BathParams& p) {
    const double c = std::cos(0.5 * p.psi());
    const double s = std::sin(0.5 * p.psi());
    return {Complex(c) * pauli::spin_x() - Complex(s) * pauli::spin_y(),
            Complex(s) * pauli::spin_x() + Complex(c) * pauli::spin_y()};
}

Complex lambda_plus(const BathParams& p) {
    return kI * std::sqrt(p.m()) * std::polar(1.0, 0.5 * p.psi());
}

Matrix2 jminus_alpha(const BathParams& p) {
    if (p.n() == 0.0) throw DomainError("jminus_alpha: undefined for N = 0 (alpha = 1)");
    const double a = p.alpha();
    const auto [j1, j2] = rotated_quadrature_operators(p);
    // 1 - alpha^2 < 0; principal square root is i sqrt(alpha^2 - 1).
    const Complex norm = std::sqrt(Complex(1.0 - a * a, 0.0));
    const Matrix2 jm = (j1 - kI * a * j2) / norm;
    const double residual = max_abs_diff(2.0 * lambda_plus(p) * jm, lindblad_operator(p));
    if (residual >= 1e-12 * std::max(1.0, std::sqrt(p.n() + 1.0)))
        throw NumericError("jminus_alpha: S != 2 lambda_+ J_-(alpha) (residual " + std::to_string(residual) + ")");
    return jm;
}

} // namespace zeno
