#pragma once

// Single- and two-qubit state algebra: Bloch vectors, density matrices,
// entropies, partial traces, Schmidt coefficients and projective measurement
// statistics. All entropies are in bits.

#include <array>
#include <complex>
#include <optional>
#include <utility>

#include <Eigen/Dense>

namespace qcr {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;

/// Tolerances shared by the validating constructors.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;

/// Real 3-vector of Pauli expectations (x, y, z). |s| <= 1 for states.
class BlochVector {
  public:
    BlochVector() = default;
    BlochVector(double x, double y, double z) : v_(x, y, z) {
    }
    explicit BlochVector(const Vec3 &v) : v_(v) {
    }

    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }
    double norm() const { return v_.norm(); }
    const Vec3 &vec() const { return v_; }

    /// True when |s| <= 1 + 1e-12.
    bool is_state() const { return v_.norm() <= 1.0 + kNormTol; }

  private:
    Vec3 v_ = Vec3::Zero();
};

/// Unit Bloch direction of a two-outcome projective measurement.
class MeasurementAxis {
  public:
    /// Requires |direction| = 1 within 1e-12; throws DomainError otherwise.
    explicit MeasurementAxis(const Vec3 &direction);

    /// Normalizes any nonzero vector.
    static MeasurementAxis from_direction(const Vec3 &direction);

    static MeasurementAxis x() { return MeasurementAxis(Vec3::UnitX()); }
    static MeasurementAxis y() { return MeasurementAxis(Vec3::UnitY()); }
    static MeasurementAxis z() { return MeasurementAxis(Vec3::UnitZ()); }

    const Vec3 &vec() const { return dir_; }
    double dot(const MeasurementAxis &other) const { return dir_.dot(other.dir_); }
    double dot(const BlochVector &s) const { return dir_.dot(s.vec()); }
    MeasurementAxis operator-() const { return MeasurementAxis(Vec3(-dir_)); }

  private:
    Vec3 dir_;
};

/// Outcome probabilities of a two-outcome measurement.
struct ProbPair {
    double p_plus = 0.5;
    double p_minus = 0.5;
};

/// Hermitian, PSD, unit-trace 2x2 or 4x4 matrix. Construction validates
/// hermiticity and trace within 1e-10 and eigenvalues >= -1e-10.
class DensityMatrix {
  public:
    explicit DensityMatrix(const Eigen::MatrixXcd &m);

    static DensityMatrix pure(const Eigen::VectorXcd &psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;

  private:
    Eigen::MatrixXcd m_;
};

enum class Subsystem { A, B };

/// Pauli matrices X, Y, Z.
const std::array<Mat2c, 3> &pauli();

/// sigma(n) = n_x X + n_y Y + n_z Z.
Mat2c pauli_dot(const Vec3 &n);

/// Projector onto the +1 (sign=+1) or -1 (sign=-1) eigenspace of axis.sigma.
Mat2c axis_projector(const MeasurementAxis &axis, int sign);

/// -p log2 p - (1-p) log2 (1-p) with 0 log 0 = 0. Throws DomainError for
/// p outside [0, 1].
double binary_entropy(double p);

/// Shannon entropy in bits of a probability vector (entries <= 0 skipped).
double shannon_entropy(const double *probs, std::size_t n);

template <std::size_t N>
double shannon_entropy(const std::array<double, N> &probs) {
    return shannon_entropy(probs.data(), N);
}

/// rho = (I + s_0 F_0.sigma + s_1 F_1.sigma + s_2 F_2.sigma) / 2 where F is
/// the frame (default Pauli X, Y, Z). Frame axes must be mutually orthogonal.
DensityMatrix bloch_to_density(const BlochVector &s,
                               const std::optional<std::array<MeasurementAxis, 3>> &frame = std::nullopt);

/// Pauli expectations of a 2x2 density matrix.
BlochVector density_to_bloch(const DensityMatrix &rho);

ProbPair measurement_probs(const BlochVector &s, const MeasurementAxis &axis);

/// Shannon entropy of the outcome distribution of `axis` on state `s`.
double shannon_entropy_of(const BlochVector &s, const MeasurementAxis &axis);

/// Eigenvalues of a 2x2 Hermitian matrix, closed form, ascending.
std::array<double, 2> hermitian_eigenvalues_2x2(const Mat2c &m);

double von_neumann_entropy(const DensityMatrix &rho);

/// Reduced state of the kept qubit. Basis order |ab> with A the high bit.
DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep);

/// S(AB) - S(B).
double conditional_entropy(const DensityMatrix &rho_ab);

/// Schmidt coefficients (lambda1 >= lambda2) of a unit 4-component state.
/// Throws DomainError when |psi| differs from 1 by more than 1e-10.
std::pair<double, double> schmidt_coefficients(const Vec4c &psi);

/// Kronecker product of two 2x2 matrices (A is the left factor).
Mat4c kron(const Mat2c &a, const Mat2c &b);

/// Joint distribution of product projective measurements, ordered
/// {++, +-, -+, --} (A outcome major). Negative round-off clipped to 0.
std::array<double, 4> joint_probs(const DensityMatrix &rho_ab, const MeasurementAxis &axis_a,
                                  const MeasurementAxis &axis_b);

}  // namespace qcr
