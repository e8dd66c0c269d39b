#include "qcr/ontic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qcr/errors.hpp"
#include "qcr/lp.hpp"

namespace qcr {

namespace {

constexpr double kTol = 1e-10;
constexpr std::array<double, 4> kXiM1 = {-1, 1, -1, 1};
constexpr std::array<double, 4> kXiM2 = {1, 1, -1, -1};

void require_range(double m) {
    if (!(m >= 0.0 && m <= std::sqrt(2.0) / 2.0 + 1e-12))
        throw DomainError("<M1> must lie in [0, sqrt2/2]");
}

double dot4(const std::array<double, 4> &u, const OnticDistribution &v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

// One inequality "value(v) >= 0", affine in v = (c, kappa, nu, tau).
struct Affine {
    double k;
    std::array<double, 4> g;
    double eval(const std::array<double, 4> &v) const {
        return k + g[0] * v[0] + g[1] * v[1] + g[2] * v[2] + g[3] * v[3];
    }
};

// Affine forms of the 16 distribution entries (read off make_model) plus the
// upper bounds kappa, nu, tau <= 1 - c. Lower bounds >= -c are the c+kappa,
// c+nu, c+tau entries.
std::vector<Affine> feasibility_rows(double m) {
    auto entries = [m](const std::array<double, 4> &v) {
        const auto mod = make_model(m, v[0], v[1], v[2], v[3]);
        std::array<double, 16> e{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                e[4 * i + j] = mod.mu[i][j];
        return e;
    };
    const auto e0 = entries({0, 0, 0, 0});
    std::array<std::array<double, 16>, 4> ei;
    for (int k = 0; k < 4; ++k) {
        std::array<double, 4> v{};
        v[k] = 1.0;
        ei[k] = entries(v);
    }
    std::vector<Affine> rows;
    for (int r = 0; r < 16; ++r)
        rows.push_back({e0[r], {ei[0][r] - e0[r], ei[1][r] - e0[r], ei[2][r] - e0[r], ei[3][r] - e0[r]}});
    rows.push_back({1.0, {-1, -1, 0, 0}});
    rows.push_back({1.0, {-1, 0, -1, 0}});
    rows.push_back({1.0, {-1, 0, 0, -1}});
    return rows;
}

// kappa + nu + tau = 1 - 4c - 2m
double equality_rhs(double m, double c) {
    return 1.0 - 4.0 * c - 2.0 * m;
}

bool lp_feasible(double m) {
    // substitute kappa = k' - c etc. so every variable is >= 0:
    // y = (c, k', n', t')
    const auto rows = feasibility_rows(m);
    Eigen::MatrixXd A(rows.size(), 4);
    Eigen::VectorXd b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &g = rows[i].g;
        A(i, 0) = -(g[0] - g[1] - g[2] - g[3]);
        A(i, 1) = -g[1];
        A(i, 2) = -g[2];
        A(i, 3) = -g[3];
        b(i) = rows[i].k;
    }
    // k'+n'+t' - 3c = 1 - 4c - 2m, i.e. c + k' + n' + t' = 1 - 2m
    Eigen::MatrixXd E(1, 4);
    E << 1, 1, 1, 1;
    Eigen::VectorXd e(1);
    e << 1.0 - 2.0 * m;
    return find_feasible_point(A, b, E, e).has_value();
}

bool grid_feasible(double m, double step) {
    const auto rows = feasibility_rows(m);
    const double cmax = (1.0 - m) / 2.0;
    const long nc = static_cast<long>(std::floor(cmax / step + 1e-9));
    for (long ic = 0; ic <= nc; ++ic) {
        const double c = ic * step;
        const long nk = static_cast<long>(std::floor(1.0 / step + 1e-9));
        for (long ik = 0; ik <= nk; ++ik) {
            const double kappa = -c + ik * step;
            const double S = equality_rhs(m, c) - kappa;
            // every row becomes alpha + beta * nu >= 0 with tau = S - nu
            double lo = -1e300, hi = 1e300;
            bool ok = true;
            for (const auto &r : rows) {
                const double alpha = r.k + r.g[0] * c + r.g[1] * kappa + r.g[3] * S;
                const double beta = r.g[2] - r.g[3];
                if (std::abs(beta) < 1e-15) {
                    if (alpha < -1e-12) {
                        ok = false;
                        break;
                    }
                } else if (beta > 0) {
                    lo = std::max(lo, -alpha / beta);
                } else {
                    hi = std::min(hi, -alpha / beta);
                }
            }
            if (ok && lo <= hi + 1e-12)
                return true;
        }
    }
    return false;
}

}  // namespace

NoncontextualModel make_model(double m, double c, double kappa, double nu, double tau) {
    const double a = (1.0 - m) / 2.0 - c;
    const double d = a;
    const double b = c + m;
    NoncontextualModel mod{};
    mod.a = a;
    mod.b = b;
    mod.c = c;
    mod.d = d;
    mod.kappa = kappa;
    mod.nu = nu;
    mod.tau = tau;
    mod.mu[0] = {a, b, c, d};
    mod.mu[1] = {b + kappa, a - kappa, d - kappa, c + kappa};
    mod.mu[2] = {d - nu, c + nu, b + nu, a - nu};
    mod.mu[3] = {c + tau, d - tau, a - tau, b + tau};
    return mod;
}

std::optional<NoncontextualModel> construct_model(double m) {
    require_range(m);
    if (m > 0.5 + 1e-12)
        return std::nullopt;
    const double k = (1.0 - 2.0 * m) / 3.0;
    return make_model(m, 0.0, k, k, k);
}

ModelReport verify_model(const NoncontextualModel &model, double m) {
    ModelReport rep{true, true, true};
    for (const auto &mu : model.mu) {
        double sum = 0.0;
        for (double p : mu) {
            if (p < -kTol)
                rep.valid_distributions = false;
            sum += p;
        }
        if (std::abs(sum - 1.0) > kTol)
            rep.valid_distributions = false;
    }
    const std::array<std::array<double, 2>, 4> pattern = {{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(dot4(kXiM1, model.mu[i]) - pattern[i][0] * m) > kTol ||
            std::abs(dot4(kXiM2, model.mu[i]) - pattern[i][1] * m) > kTol)
            rep.equal_predictability = false;
    }
    for (int j = 0; j < 4; ++j)
        if (std::abs(model.mu[0][j] + model.mu[2][j] - model.mu[1][j] - model.mu[3][j]) > 2 * kTol)
            rep.preparation_equivalence = false;
    return rep;
}

bool feasibility_oracle(double m, OracleMethod method, double grid_step) {
    require_range(m);
    if (method == OracleMethod::Grid) {
        if (!(grid_step > 0.0))
            throw DomainError("grid step must be positive");
        return grid_feasible(m, grid_step);
    }
    return lp_feasible(m);
}

}  // namespace qcr
