#pragma once

// Correlation matrix, Horodecki parameter, CHSH optimum and the
// memory-assisted uncertainty bound on S(A|B).

#include "qcr/qstate.hpp"

namespace qcr {

using CorrelationMatrix = Eigen::Matrix3d;

struct CHSHSetting {
    MeasurementAxis A0, A1, B0, B1;
};

struct MemoryMeasurementPair {
    MeasurementAxis MB;   // partner of R
    MeasurementAxis MBp;  // partner of Q
    double bound;
    // Bob angles, MB = (cos th cos ph, cos th sin ph, sin th)
    double theta, phi, theta_p, phi_p;
};

/// T_jk = tr(rho sigma_j (x) sigma_k).
CorrelationMatrix correlation_matrix(const DensityMatrix &rho_ab);

/// Sum of the two largest eigenvalues of T^T T.
double horodecki_parameter(const CorrelationMatrix &T);

/// 2 sqrt(M).
double chsh_max(const DensityMatrix &rho_ab);

/// Settings reaching chsh_max. Throws DomainError when M is (numerically) zero.
CHSHSetting optimal_settings(const DensityMatrix &rho_ab);

/// |E(A0,B0) + E(A0,B1) + E(A1,B0) - E(A1,B1)| with E(a,b) = a^T T b.
double chsh_value(const DensityMatrix &rho_ab, const CHSHSetting &setting);

/// H(X|Y) = H(joint outcomes of X (x) Y) - H(Y marginal).
double conditional_shannon_entropy(const DensityMatrix &rho_ab, const MeasurementAxis &axis_a,
                                   const MeasurementAxis &axis_b);

/// H(Q|MBp) + H(R|MB) - 1.
double eur_memory_bound(const DensityMatrix &rho_ab, const MeasurementAxis &Q, const MeasurementAxis &R,
                        const MeasurementAxis &MBp, const MeasurementAxis &MB);

/// Bob axis from angles.
MeasurementAxis bob_axis(double theta, double phi);

/// Minimizes eur_memory_bound over both Bob axes: grid of step pi/60 over
/// theta in [-pi/2, pi/2], phi in [-pi, pi), then pattern-search refinement.
/// Ties resolve to the lexicographically smallest angles.
MemoryMeasurementPair optimize_memory_measurements(const DensityMatrix &rho_ab, const MeasurementAxis &Q,
                                                   const MeasurementAxis &R);

}  // namespace qcr
