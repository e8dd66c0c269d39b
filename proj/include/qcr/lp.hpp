#pragma once

// Dense phase-I simplex for small feasibility problems.

#include <optional>

#include <Eigen/Dense>

namespace qcr {

/// Find x >= 0 with A_ub x <= b_ub and A_eq x = b_eq. Either block may have
/// zero rows. Returns a feasible point, or nullopt when the phase-I optimum
/// stays above `tol`. Bland's rule, so it always terminates.
std::optional<Eigen::VectorXd> find_feasible_point(const Eigen::MatrixXd &A_ub, const Eigen::VectorXd &b_ub,
                                                   const Eigen::MatrixXd &A_eq, const Eigen::VectorXd &b_eq,
                                                   double tol = 1e-9);

}  // namespace qcr
