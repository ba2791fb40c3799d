#include "zeno/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

Matrix2& Matrix2::operator+=(const Matrix2& o) {
    for (int i = 0; i < 4; ++i) m_[i] += o.m_[i];
    return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
    for (int i = 0; i < 4; ++i) m_[i] -= o.m_[i];
    return *this;
}

Matrix2& Matrix2::operator*=(Complex s) {
    for (auto& v : m_) v *= s;
    return *this;
}

Matrix2 Matrix2::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

Matrix2 Matrix2::inverse() const {
    const Complex det = determinant();
    if (std::abs(det) < 1e-300) throw NumericError("Matrix2::inverse: singular matrix");
    return Matrix2{m_[3], -m_[1], -m_[2], m_[0]} / det;
}

bool Matrix2::is_finite() const {
    return std::all_of(m_.begin(), m_.end(), [](Complex c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

bool Matrix2::is_hermitian(double tol) const {
    return max_abs_diff(*this, adjoint()) <= tol;
}

double Matrix2::max_abs() const {
    double r = 0.0;
    for (auto c : m_) r = std::max(r, std::abs(c));
    return r;
}

Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
Matrix2 operator-(const Matrix2& a) { return Complex(-1.0) * a; }
Matrix2 operator*(Complex s, Matrix2 a) { return a *= s; }
Matrix2 operator*(Matrix2 a, Complex s) { return a *= s; }
Matrix2 operator/(Matrix2 a, Complex s) { return a *= (1.0 / s); }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Matrix2 commutator(const Matrix2& a, const Matrix2& b) { return a * b - b * a; }

double max_abs_diff(const Matrix2& a, const Matrix2& b) { return (a - b).max_abs(); }

namespace pauli {
Matrix2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 sigma_y() { return {0.0, -kI, kI, 0.0}; }
Matrix2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }
Matrix2 sigma_plus() { return {0.0, 1.0, 0.0, 0.0}; }
Matrix2 sigma_minus() { return {0.0, 0.0, 1.0, 0.0}; }
Matrix2 spin_x() { return 0.5 * sigma_x(); }
Matrix2 spin_y() { return 0.5 * sigma_y(); }
Matrix2 spin_z() { return 0.5 * sigma_z(); }
} // namespace pauli

// ---------------------------------------------------------------- states

StateVector2::StateVector2(Complex up, Complex down) {
    const double norm = std::sqrt(std::norm(up) + std::norm(down));
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw DomainError("StateVector2: cannot normalize a zero or non-finite vector");
    up /= norm;
    down /= norm;
    const Complex ref = std::abs(up) > kPhaseThreshold ? up : down;
    const Complex phase = std::conj(ref) / std::abs(ref);
    a_ = {up * phase, down * phase};
    // Remove the rounding residue left on the reference amplitude.
    if (std::abs(up) > kPhaseThreshold)
        a_[0] = a_[0].real();
    else
        a_[1] = a_[1].real();
}

Complex inner(const StateVector2& bra, const StateVector2& ket) {
    return std::conj(bra.up()) * ket.up() + std::conj(bra.down()) * ket.down();
}

Matrix2 outer(const StateVector2& ket, const StateVector2& bra) {
    return {ket.up() * std::conj(bra.up()), ket.up() * std::conj(bra.down()),
            ket.down() * std::conj(bra.up()), ket.down() * std::conj(bra.down())};
}

Matrix2 projector_onto(const StateVector2& v) { return outer(v, v); }

std::array<Complex, 2> apply(const Matrix2& a, const StateVector2& v) {
    return {a(0, 0) * v.up() + a(0, 1) * v.down(), a(1, 0) * v.up() + a(1, 1) * v.down()};
}

bool same_ray(const StateVector2& a, const StateVector2& b, double tol) {
    // Compare amplitudes after the canonical phase, which is sharper than the
    // overlap near 1 (1 - |<a|b>| is quadratic in the displacement).
    return std::abs(a.up() - b.up()) <= tol && std::abs(a.down() - b.down()) <= tol;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double distance(const BlochVector& a, const BlochVector& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

// ---------------------------------------------------------------- density matrices

namespace {

double hermitian_min_eigenvalue(const Matrix2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return 0.5 * (a + d) - half_gap;
}

} // namespace

DensityMatrix::DensityMatrix(const Matrix2& m)
    : DensityMatrix(m, kHermitianTol, kTraceTol, kPositivityTol) {}

DensityMatrix::DensityMatrix(const Matrix2& m, double hermitian_tol, double trace_tol,
                             double positivity_tol)
    : m_(m) {
    if (!m.is_finite()) throw DomainError("DensityMatrix: non-finite entries");
    if (!m.is_hermitian(hermitian_tol)) throw DomainError("DensityMatrix: matrix is not Hermitian");
    if (std::abs(m.trace() - 1.0) > trace_tol)
        throw DomainError("DensityMatrix: trace deviates from 1 by " +
                          std::to_string(std::abs(m.trace() - 1.0)));
    const double lo = hermitian_min_eigenvalue(m);
    if (lo < -positivity_tol)
        throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
}

DensityMatrix DensityMatrix::pure(const StateVector2& v) { return DensityMatrix(projector_onto(v)); }

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(0.5 * Matrix2::identity()); }

double DensityMatrix::min_eigenvalue() const { return hermitian_min_eigenvalue(m_); }

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 * distance(density_to_bloch(a), density_to_bloch(b));
}

// ---------------------------------------------------------------- directions

double wrap_angle(double phi) {
    double w = std::fmod(phi, 2.0 * kPi);
    if (w < 0.0) w += 2.0 * kPi;
    if (w >= 2.0 * kPi) w = 0.0;
    return w;
}

MeasurementDirection::MeasurementDirection(double theta, double phi) {
    constexpr double slack = 1e-12;
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw DomainError("MeasurementDirection: non-finite angle");
    if (theta < -slack || theta > kPi + slack)
        throw DomainError("MeasurementDirection: theta outside [0, pi]");
    theta_ = std::clamp(theta, 0.0, kPi);
    phi_ = (theta_ == 0.0 || theta_ == kPi) ? 0.0 : wrap_angle(phi);
}

MeasurementDirection MeasurementDirection::folded(double theta, double phi) {
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    if (t > kPi) {
        t = 2.0 * kPi - t;
        phi += kPi;
    }
    return {t, phi};
}

BlochVector MeasurementDirection::unit_vector() const {
    const double s = std::sin(theta_);
    return {std::cos(phi_) * s, std::sin(phi_) * s, std::cos(theta_)};
}

// ---------------------------------------------------------------- conversions

BlochVector density_to_bloch(const DensityMatrix& rho) {
    const Matrix2& m = rho.matrix();
    // trace(rho sigma_i) written out for the three Pauli matrices.
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix bloch_to_density(const BlochVector& b) {
    if (!std::isfinite(b.norm())) throw DomainError("bloch_to_density: non-finite Bloch vector");
    if (b.norm() > 1.0 + 1e-6)
        throw DomainError("bloch_to_density: |b| = " + std::to_string(b.norm()) + " exceeds 1");
    const Matrix2 m{0.5 * (1.0 + b.z), Complex(0.5 * b.x, -0.5 * b.y), Complex(0.5 * b.x, 0.5 * b.y),
                    0.5 * (1.0 - b.z)};
    return DensityMatrix(m, DensityMatrix::kHermitianTol, DensityMatrix::kTraceTol, 1e-6);
}

Matrix2 spin_direction_operator(const MeasurementDirection& dir) {
    const BlochVector n = dir.unit_vector();
    return Complex(n.x) * pauli::sigma_x() + Complex(n.y) * pauli::sigma_y() +
           Complex(n.z) * pauli::sigma_z();
}

EigenstatePair direction_eigenstates(const MeasurementDirection& dir) {
    const double c = std::cos(0.5 * dir.theta());
    const double s = std::sin(0.5 * dir.theta());
    const Complex e = std::polar(1.0, dir.phi());
    return {StateVector2(c, s * e), StateVector2(-s, c * e)};
}

double expectation(const Matrix2& a, const DensityMatrix& rho) {
    if (!a.is_hermitian(1e-10)) throw DomainError("expectation: observable is not Hermitian");
    const Complex v = (a * rho.matrix()).trace();
    if (std::abs(v.imag()) >= 1e-10)
        throw NumericError("expectation: imaginary residue " + std::to_string(v.imag()));
    return v.real();
}

// ---------------------------------------------------------------- eigensystem

namespace {

StateVector2 null_vector(const Matrix2& a, Complex lambda, double scale) {
    // Each row of (A - lambda I) gives a candidate orthogonal to it.
    const std::array<Complex, 2> from_row0{a(0, 1), lambda - a(0, 0)};
    const std::array<Complex, 2> from_row1{lambda - a(1, 1), a(1, 0)};
    const double n0 = std::hypot(std::abs(from_row0[0]), std::abs(from_row0[1]));
    const double n1 = std::hypot(std::abs(from_row1[0]), std::abs(from_row1[1]));
    if (std::max(n0, n1) <= 1e-14 * scale) return StateVector2::excited();
    return n0 >= n1 ? StateVector2(from_row0[0], from_row0[1])
                    : StateVector2(from_row1[0], from_row1[1]);
}

} // namespace

std::array<Eigenpair, 2> eigensystem_2x2(const Matrix2& a) {
    if (!a.is_finite()) throw DomainError("eigensystem_2x2: non-finite matrix");
    const double scale = std::max(a.max_abs(), 1e-300);
    const Complex mean = 0.5 * a.trace();
    const Complex half_diff = 0.5 * (a(0, 0) - a(1, 1));
    const Complex disc = std::sqrt(half_diff * half_diff + a(0, 1) * a(1, 0));
    Complex l1 = mean + disc;
    Complex l2 = mean - disc;

    const double tie = 1e-12 * scale;
    const auto before = [tie](Complex p, Complex q) {
        if (std::abs(p.real() - q.real()) > tie) return p.real() > q.real();
        return p.imag() > q.imag();
    };
    if (before(l2, l1)) std::swap(l1, l2);

    // Scalar matrix: every vector is an eigenvector.
    if (max_abs_diff(a, mean * Matrix2::identity()) <= 1e-14 * scale)
        return {Eigenpair{l1, StateVector2::excited()}, Eigenpair{l2, StateVector2::ground()}};

    StateVector2 v1 = null_vector(a, l1, scale);
    StateVector2 v2 = null_vector(a, l2, scale);
    const double independence = std::abs(v1.up() * v2.down() - v1.down() * v2.up());
    if (independence < 1e-8)
        throw DefectiveMatrixError("eigensystem_2x2: matrix is defective (eigenvectors dependent)");
    return {Eigenpair{l1, v1}, Eigenpair{l2, v2}};
}

} // namespace zeno
