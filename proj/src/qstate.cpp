#include "qcr/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcr/errors.hpp"

namespace qcr {

MeasurementAxis::MeasurementAxis(const Vec3 &direction) : dir_(direction) {
    if (!std::isfinite(direction.norm()) || std::abs(direction.norm() - 1.0) > kNormTol)
        throw DomainError("measurement axis must have unit norm, got |n| = " + std::to_string(direction.norm()));
}

MeasurementAxis MeasurementAxis::from_direction(const Vec3 &direction) {
    const double n = direction.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError("cannot normalize a zero or non-finite direction");
    return MeasurementAxis(Vec3(direction / n));
}

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd &m) : m_(m) {
    if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4))
        throw DomainError("density matrix must be 2x2 or 4x4");
    if (!m.allFinite())
        throw DomainError("density matrix has non-finite entries");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw DomainError("density matrix is not Hermitian");
    const Complex tr = m.trace();
    if (std::abs(tr.real() - 1.0) > kHermitianTol || std::abs(tr.imag()) > kHermitianTol)
        throw DomainError("density matrix trace differs from 1");
    // symmetrize away round-off before storing
    m_ = 0.5 * (m + m.adjoint());
    if (eigenvalues().minCoeff() < -kHermitianTol)
        throw DomainError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd &psi) {
    if (psi.size() != 2 && psi.size() != 4)
        throw DomainError("state vector must have 2 or 4 components");
    if (std::abs(psi.norm() - 1.0) > kHermitianTol)
        throw DomainError("state vector is not normalized");
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim != 2 && dim != 4)
        throw DomainError("dimension must be 2 or 4");
    return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    if (dim() == 2) {
        auto ev = hermitian_eigenvalues_2x2(m_);
        return Eigen::Vector2d(ev[0], ev[1]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

const std::array<Mat2c, 3> &pauli() {
    static const std::array<Mat2c, 3> p = [] {
        const Complex i(0.0, 1.0);
        Mat2c x, y, z;
        x << 0, 1, 1, 0;
        y << 0, -i, i, 0;
        z << 1, 0, 0, -1;
        return std::array<Mat2c, 3>{x, y, z};
    }();
    return p;
}

Mat2c pauli_dot(const Vec3 &n) {
    const auto &p = pauli();
    return n.x() * p[0] + n.y() * p[1] + n.z() * p[2];
}

Mat2c axis_projector(const MeasurementAxis &axis, int sign) {
    const double s = sign >= 0 ? 1.0 : -1.0;
    return 0.5 * (Mat2c::Identity() + s * pauli_dot(axis.vec()));
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("binary_entropy: p must lie in [0, 1]");
    if (p == 0.0 || p == 1.0)
        return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double shannon_entropy(const double *probs, std::size_t n) {
    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (probs[i] > 0.0)
            h -= probs[i] * std::log2(probs[i]);
    return h;
}

DensityMatrix bloch_to_density(const BlochVector &s, const std::optional<std::array<MeasurementAxis, 3>> &frame) {
    if (!s.is_state())
        throw DomainError("Bloch vector has norm > 1");
    Vec3 n = s.vec();
    if (frame) {
        const auto &f = *frame;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::abs(f[i].dot(f[j])) > 1e-10)
                    throw DomainError("frame axes are not mutually orthogonal");
        n = s.x() * f[0].vec() + s.y() * f[1].vec() + s.z() * f[2].vec();
    }
    return DensityMatrix(0.5 * (Mat2c::Identity() + pauli_dot(n)));
}

BlochVector density_to_bloch(const DensityMatrix &rho) {
    if (rho.dim() != 2)
        throw DomainError("density_to_bloch needs a 2x2 matrix");
    const auto &m = rho.matrix();
    return BlochVector(2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real());
}

ProbPair measurement_probs(const BlochVector &s, const MeasurementAxis &axis) {
    if (!s.is_state())
        throw DomainError("Bloch vector has norm > 1");
    const double e = std::clamp(axis.dot(s), -1.0, 1.0);
    return {(1.0 + e) / 2.0, (1.0 - e) / 2.0};
}

double shannon_entropy_of(const BlochVector &s, const MeasurementAxis &axis) {
    return binary_entropy(measurement_probs(s, axis).p_minus);
}

std::array<double, 2> hermitian_eigenvalues_2x2(const Mat2c &m) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - r, mean + r};
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const Eigen::VectorXd ev = rho.eigenvalues();
    double s = 0.0;
    for (int i = 0; i < ev.size(); ++i) {
        const double l = std::clamp(ev[i], 0.0, 1.0);
        if (l > 0.0)
            s -= l * std::log2(l);
    }
    return s;
}

DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep) {
    if (rho.dim() != 4)
        throw DomainError("partial_trace needs a 4x4 matrix");
    const auto &m = rho.matrix();
    Mat2c r = Mat2c::Zero();
    // index = 2*a + b
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                r(i, j) += keep == Subsystem::A ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
    return DensityMatrix(r);
}

double conditional_entropy(const DensityMatrix &rho_ab) {
    return von_neumann_entropy(rho_ab) - von_neumann_entropy(partial_trace(rho_ab, Subsystem::B));
}

std::pair<double, double> schmidt_coefficients(const Vec4c &psi) {
    if (std::abs(psi.norm() - 1.0) > kHermitianTol)
        throw DomainError("schmidt_coefficients: state is not normalized");
    Mat2c c;
    c << psi(0), psi(1), psi(2), psi(3);
    Eigen::JacobiSVD<Mat2c> svd(c);
    const auto sv = svd.singularValues();
    const double l1 = sv(0) * sv(0), l2 = sv(1) * sv(1);
    return {std::max(l1, l2), std::min(l1, l2)};
}

Mat4c kron(const Mat2c &a, const Mat2c &b) {
    Mat4c k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
}

std::array<double, 4> joint_probs(const DensityMatrix &rho_ab, const MeasurementAxis &axis_a,
                                  const MeasurementAxis &axis_b) {
    if (rho_ab.dim() != 4)
        throw DomainError("joint_probs needs a 4x4 matrix");
    std::array<double, 4> p{};
    int k = 0;
    for (int sa : {1, -1})
        for (int sb : {1, -1}) {
            const Mat4c proj = kron(axis_projector(axis_a, sa), axis_projector(axis_b, sb));
            p[k++] = std::max(0.0, (rho_ab.matrix() * proj).trace().real());
        }
    return p;
}

}  // namespace qcr
