#include "qcr/nonlocal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "qcr/contextuality.hpp"
#include "qcr/errors.hpp"

namespace qcr {

namespace {

void require_two_qubit(const DensityMatrix &rho) {
    if (rho.dim() != 4)
        throw DomainError("expected a two-qubit (4x4) density matrix");
}

struct Eigenpairs {
    std::array<double, 3> values;  // descending
    std::array<Vec3, 3> vectors;
};

// Descending eigenpairs of a symmetric 3x3 matrix with a fixed basis inside
// degenerate clusters: Gram-Schmidt of the projected axes z, x, y, then sign
// normalization (first nonzero component positive).
Eigenpairs canonical_eigenpairs(const Eigen::Matrix3d &S) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(S);
    Eigenpairs out;
    for (int i = 0; i < 3; ++i) {
        out.values[i] = es.eigenvalues()(2 - i);
        out.vectors[i] = es.eigenvectors().col(2 - i);
    }
    const std::array<Vec3, 3> axes = {Vec3::UnitZ(), Vec3::UnitX(), Vec3::UnitY()};
    int start = 0;
    while (start < 3) {
        int end = start + 1;
        while (end < 3 && std::abs(out.values[end] - out.values[start]) < 1e-9)
            ++end;
        if (end - start > 1) {
            Eigen::Matrix3d P = Eigen::Matrix3d::Zero();
            for (int i = start; i < end; ++i)
                P += out.vectors[i] * out.vectors[i].transpose();
            std::vector<Vec3> basis;
            for (const Vec3 &e : axes) {
                if (static_cast<int>(basis.size()) == end - start)
                    break;
                Vec3 w = P * e;
                for (const Vec3 &b : basis)
                    w -= b.dot(w) * b;
                if (w.norm() > 1e-6)
                    basis.push_back(w.normalized());
            }
            for (int i = start; i < end; ++i)
                out.vectors[i] = basis[i - start];
        }
        start = end;
    }
    for (Vec3 &v : out.vectors) {
        for (int k = 0; k < 3; ++k) {
            if (std::abs(v(k)) > 1e-12) {
                if (v(k) < 0)
                    v = -v;
                break;
            }
        }
    }
    return out;
}

double correlator(const CorrelationMatrix &T, const MeasurementAxis &a, const MeasurementAxis &b) {
    return a.vec().dot(T * b.vec());
}

}  // namespace

CorrelationMatrix correlation_matrix(const DensityMatrix &rho_ab) {
    require_two_qubit(rho_ab);
    const auto &p = pauli();
    CorrelationMatrix T;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            T(j, k) = (rho_ab.matrix() * kron(p[j], p[k])).trace().real();
    return T;
}

double horodecki_parameter(const CorrelationMatrix &T) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(T.transpose() * T, Eigen::EigenvaluesOnly);
    const auto &ev = es.eigenvalues();
    return std::max(0.0, ev(2) + ev(1));
}

double chsh_max(const DensityMatrix &rho_ab) {
    return 2.0 * std::sqrt(horodecki_parameter(correlation_matrix(rho_ab)));
}

CHSHSetting optimal_settings(const DensityMatrix &rho_ab) {
    const CorrelationMatrix T = correlation_matrix(rho_ab);
    const Eigenpairs ep = canonical_eigenpairs(T.transpose() * T);
    const double m1 = std::max(ep.values[0], 0.0);
    const double m2 = std::max(ep.values[1], 0.0);
    if (m1 + m2 <= 1e-15)
        throw DomainError("optimal_settings: correlation matrix vanishes");
    const Vec3 &c1 = ep.vectors[0];
    const Vec3 &c2 = ep.vectors[1];
    const double chi = std::atan(std::sqrt(m2 / m1));
    const MeasurementAxis B0 = MeasurementAxis::from_direction(std::cos(chi) * c1 + std::sin(chi) * c2);
    const MeasurementAxis B1 = MeasurementAxis::from_direction(std::cos(chi) * c1 - std::sin(chi) * c2);
    const Vec3 t1 = T * c1;
    const Vec3 t2 = T * c2;
    const MeasurementAxis A0 = MeasurementAxis::from_direction(t1);
    // with m2 = 0 any A1 gives the same value since B0 = B1
    const MeasurementAxis A1 = t2.norm() < 1e-12 ? perpendicular_axis(A0) : MeasurementAxis::from_direction(t2);
    return {A0, A1, B0, B1};
}

double chsh_value(const DensityMatrix &rho_ab, const CHSHSetting &s) {
    const CorrelationMatrix T = correlation_matrix(rho_ab);
    return std::abs(correlator(T, s.A0, s.B0) + correlator(T, s.A0, s.B1) + correlator(T, s.A1, s.B0) -
                    correlator(T, s.A1, s.B1));
}

double conditional_shannon_entropy(const DensityMatrix &rho_ab, const MeasurementAxis &axis_a,
                                   const MeasurementAxis &axis_b) {
    const auto p = joint_probs(rho_ab, axis_a, axis_b);
    const std::array<double, 2> pb = {p[0] + p[2], p[1] + p[3]};
    return shannon_entropy(p) - shannon_entropy(pb);
}

double eur_memory_bound(const DensityMatrix &rho_ab, const MeasurementAxis &Q, const MeasurementAxis &R,
                        const MeasurementAxis &MBp, const MeasurementAxis &MB) {
    return conditional_shannon_entropy(rho_ab, Q, MBp) + conditional_shannon_entropy(rho_ab, R, MB) - 1.0;
}

MeasurementAxis bob_axis(double theta, double phi) {
    return MeasurementAxis::from_direction(
        Vec3(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), std::sin(theta)));
}

namespace {

struct AngleMin {
    double theta, phi, value;
};

AngleMin minimize_angles(const std::function<double(double, double)> &f) {
    using std::numbers::pi;
    const double step = pi / 60.0;
    AngleMin best{0, 0, std::numeric_limits<double>::infinity()};
    for (int i = 0; i <= 60; ++i) {
        const double th = -pi / 2 + i * step;
        for (int j = 0; j < 120; ++j) {
            const double ph = -pi + j * step;
            const double v = f(th, ph);
            if (v < best.value - 1e-15)
                best = {th, ph, v};
        }
    }
    // pattern search
    double h = step;
    while (h > 1e-9) {
        bool moved = false;
        for (const auto &d : {std::array<double, 2>{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
            const double th = std::clamp(best.theta + d[0] * h, -pi / 2, pi / 2);
            const double ph = best.phi + d[1] * h;
            const double v = f(th, ph);
            if (v < best.value - 1e-15) {
                best = {th, ph, v};
                moved = true;
                break;
            }
        }
        if (!moved)
            h /= 2.0;
    }
    return best;
}

}  // namespace

MemoryMeasurementPair optimize_memory_measurements(const DensityMatrix &rho_ab, const MeasurementAxis &Q,
                                                   const MeasurementAxis &R) {
    require_two_qubit(rho_ab);
    // the two conditional entropies depend on disjoint angle pairs
    const AngleMin r = minimize_angles(
        [&](double th, double ph) { return conditional_shannon_entropy(rho_ab, R, bob_axis(th, ph)); });
    const AngleMin q = minimize_angles(
        [&](double th, double ph) { return conditional_shannon_entropy(rho_ab, Q, bob_axis(th, ph)); });
    const MeasurementAxis MB = bob_axis(r.theta, r.phi);
    const MeasurementAxis MBp = bob_axis(q.theta, q.phi);
    return {MB, MBp, eur_memory_bound(rho_ab, Q, R, MBp, MB), r.theta, r.phi, q.theta, q.phi};
}

}  // namespace qcr
