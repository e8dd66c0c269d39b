#include "qcr/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qcr/errors.hpp"

namespace qcr {

std::optional<Eigen::VectorXd> find_feasible_point(const Eigen::MatrixXd &A_ub, const Eigen::VectorXd &b_ub,
                                                   const Eigen::MatrixXd &A_eq, const Eigen::VectorXd &b_eq,
                                                   double tol) {
    const long n = A_ub.rows() > 0 ? A_ub.cols() : A_eq.cols();
    const long nu = A_ub.rows(), ne = A_eq.rows();
    if ((nu > 0 && A_ub.cols() != n) || (ne > 0 && A_eq.cols() != n) || b_ub.size() != nu || b_eq.size() != ne)
        throw DomainError("find_feasible_point: inconsistent shapes");

    const long rows = nu + ne;
    const long ncols = n + nu + rows;  // structural, slack, artificial
    const long rhs = ncols;
    constexpr double eps = 1e-12;

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(rows + 1, ncols + 1);
    std::vector<long> basis(rows);
    for (long i = 0; i < rows; ++i) {
        double sign = 1.0;
        if (i < nu) {
            t.row(i).head(n) = A_ub.row(i);
            t(i, n + i) = 1.0;
            t(i, rhs) = b_ub(i);
        } else {
            t.row(i).head(n) = A_eq.row(i - nu);
            t(i, rhs) = b_eq(i - nu);
        }
        if (t(i, rhs) < 0.0)
            sign = -1.0;
        t.row(i) *= sign;
        t(i, n + nu + i) = 1.0;
        basis[i] = n + nu + i;
    }
    // reduced costs of min sum(artificials)
    for (long i = 0; i < rows; ++i)
        t.row(rows) -= t.row(i);
    for (long i = 0; i < rows; ++i)
        t(rows, n + nu + i) = 0.0;

    for (int iter = 0; iter < 10000; ++iter) {
        long enter = -1;
        for (long j = 0; j < ncols; ++j)
            if (t(rows, j) < -eps) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;
        long leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (long i = 0; i < rows; ++i) {
            if (t(i, enter) <= eps)
                continue;
            const double ratio = t(i, rhs) / t(i, enter);
            if (ratio < best - eps || (std::abs(ratio - best) <= eps && leave >= 0 && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0)
            break;  // unbounded direction; cannot happen in phase I
        t.row(leave) /= t(leave, enter);
        for (long i = 0; i <= rows; ++i)
            if (i != leave && t(i, enter) != 0.0)
                t.row(i) -= t(i, enter) * t.row(leave);
        basis[leave] = enter;
    }

    if (-t(rows, rhs) > tol)
        return std::nullopt;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (long i = 0; i < rows; ++i)
        if (basis[i] < n)
            x(basis[i]) = t(i, rhs);
    return x;
}

}  // namespace qcr
