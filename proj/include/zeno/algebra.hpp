// algebra.hpp: fixed-size 2x2 complex algebra for a single two-level system
//
// Basis ordering is {|+>, |->}: index 0 is the excited state (sigma_z = +1),
// index 1 the ground state (sigma_z = -1).

#pragma once

#include <array>
#include <complex>
#include <utility>

namespace zeno {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

class Matrix2 {
public:
    constexpr Matrix2() = default;
    constexpr Matrix2(Complex a00, Complex a01, Complex a10, Complex a11)
        : m_{a00, a01, a10, a11} {}

    constexpr Complex& operator()(int row, int col) { return m_[row * 2 + col]; }
    constexpr const Complex& operator()(int row, int col) const { return m_[row * 2 + col]; }

    Matrix2& operator+=(const Matrix2& o);
    Matrix2& operator-=(const Matrix2& o);
    Matrix2& operator*=(Complex s);

    Complex trace() const { return m_[0] + m_[3]; }
    Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    Matrix2 adjoint() const;
    Matrix2 inverse() const;

    bool is_finite() const;
    bool is_hermitian(double tol) const;
    double max_abs() const;

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 zero() { return {}; }

private:
    std::array<Complex, 4> m_{};
};

Matrix2 operator+(Matrix2 a, const Matrix2& b);
Matrix2 operator-(Matrix2 a, const Matrix2& b);
Matrix2 operator-(const Matrix2& a);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(Complex s, Matrix2 a);
Matrix2 operator*(Matrix2 a, Complex s);
Matrix2 operator/(Matrix2 a, Complex s);

Matrix2 commutator(const Matrix2& a, const Matrix2& b);
double max_abs_diff(const Matrix2& a, const Matrix2& b);

namespace pauli {
Matrix2 sigma_x();
Matrix2 sigma_y();
Matrix2 sigma_z();
// Ladder operators: sigma_plus = |+><-|, sigma_minus = |-><+|.
Matrix2 sigma_plus();
Matrix2 sigma_minus();
// Spin-1/2 operators J_i = sigma_i / 2.
Matrix2 spin_x();
Matrix2 spin_y();
Matrix2 spin_z();
} // namespace pauli

// A normalized pure state with the canonical global phase: the first
// amplitude whose modulus exceeds kPhaseThreshold is real and non-negative.
class StateVector2 {
public:
    static constexpr double kPhaseThreshold = 1e-12;

    // Normalizes and applies the canonical phase. Throws DomainError on a zero vector.
    StateVector2(Complex up, Complex down);

    static StateVector2 excited() { return {1.0, 0.0}; }
    static StateVector2 ground() { return {0.0, 1.0}; }

    Complex up() const { return a_[0]; }
    Complex down() const { return a_[1]; }
    Complex operator[](int i) const { return a_[i]; }

private:
    std::array<Complex, 2> a_;
};

Complex inner(const StateVector2& bra, const StateVector2& ket);
Matrix2 outer(const StateVector2& ket, const StateVector2& bra);
Matrix2 projector_onto(const StateVector2& v);
// Applies a matrix to raw amplitudes (no normalization).
std::array<Complex, 2> apply(const Matrix2& a, const StateVector2& v);
// Equal up to global phase: canonical amplitudes agree entrywise within tol.
bool same_ray(const StateVector2& a, const StateVector2& b, double tol);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    bool is_physical(double tol = 1e-9) const { return norm() <= 1.0 + tol; }
};

double distance(const BlochVector& a, const BlochVector& b);

// Hermitian, unit-trace, positive 2x2 matrix. The constructor validates.
class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPositivityTol = 1e-9;

    explicit DensityMatrix(const Matrix2& m);
    // Validation with caller-supplied tolerances (used by the integrator).
    DensityMatrix(const Matrix2& m, double hermitian_tol, double trace_tol, double positivity_tol);

    static DensityMatrix pure(const StateVector2& v);
    static DensityMatrix maximally_mixed();

    const Matrix2& matrix() const { return m_; }
    double min_eigenvalue() const;

private:
    Matrix2 m_;
};

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Polar angle theta in [0, pi], azimuth phi in [0, 2 pi); phi = 0 at the poles.
class MeasurementDirection {
public:
    // Rejects theta outside [0, pi] and non-finite angles; phi is reduced mod 2 pi.
    MeasurementDirection(double theta, double phi);

    // Folds an arbitrary (theta, phi) pair onto the sphere, so theta slightly
    // past a pole continues on the far side.
    static MeasurementDirection folded(double theta, double phi);

    static MeasurementDirection z_axis() { return {0.0, 0.0}; }

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    BlochVector unit_vector() const;

private:
    double theta_;
    double phi_;
};

double wrap_angle(double phi);

BlochVector density_to_bloch(const DensityMatrix& rho);
DensityMatrix bloch_to_density(const BlochVector& b);

// sigma_mu = mu . sigma for the direction's unit vector.
Matrix2 spin_direction_operator(const MeasurementDirection& dir);

struct EigenstatePair {
    StateVector2 plus;
    StateVector2 minus;
};
EigenstatePair direction_eigenstates(const MeasurementDirection& dir);

// trace(A rho) for Hermitian A. Throws DomainError for non-Hermitian A.
double expectation(const Matrix2& a, const DensityMatrix& rho);

struct Eigenpair {
    Complex value;
    StateVector2 vector;
};

// Closed-form eigensystem of a 2x2 matrix, ordered by descending real part,
// then descending imaginary part. Throws DefectiveMatrixError for a Jordan block.
std::array<Eigenpair, 2> eigensystem_2x2(const Matrix2& a);

} // namespace zeno
