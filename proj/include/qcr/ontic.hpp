#pragma once

// Four-ontic-state noncontextual models for B2 four-state sets.
//
// mu1 = (a, b, c, d) with a = d = (1-m)/2 - c and b = c + m; mu2..mu4 follow
// from mu1 through kappa, nu, tau:
//   mu2 = (b+k, a-k, d-k, c+k)
//   mu3 = (d-n, c+n, b+n, a-n)
//   mu4 = (c+t, d-t, a-t, b+t)
// Response-function differences: M1 -> (-1, 1, -1, 1), M2 -> (1, 1, -1, -1).

#include <array>
#include <optional>

namespace qcr {

using OnticDistribution = std::array<double, 4>;

struct NoncontextualModel {
    std::array<OnticDistribution, 4> mu;
    double a, b, c, d;
    double kappa, nu, tau;
};

struct ModelReport {
    bool valid_distributions;
    bool equal_predictability;
    bool preparation_equivalence;
    bool all() const { return valid_distributions && equal_predictability && preparation_equivalence; }
};

enum class OracleMethod { LP, Grid };

/// Builds mu1..mu4 from (m, c, kappa, nu, tau). No validation.
NoncontextualModel make_model(double m, double c, double kappa, double nu, double tau);

/// Symmetric model c = 0, kappa = nu = tau = (1-2m)/3 when m <= 1/2;
/// nullopt otherwise. Throws DomainError for m outside [0, sqrt2/2].
std::optional<NoncontextualModel> construct_model(double m);

/// Checks (within 1e-10): distributions valid, expectations follow the
/// (+,+), (-,+), (-,-), (+,-) pattern with magnitude m, (mu1+mu3)/2 = (mu2+mu4)/2.
ModelReport verify_model(const NoncontextualModel &model, double m);

/// Whether any (c, kappa, nu, tau) gives nonnegative distributions satisfying
/// preparation equivalence. LP is exact; Grid scans (c, kappa) with the given
/// step and solves the remaining interval problem exactly.
bool feasibility_oracle(double m, OracleMethod method = OracleMethod::LP, double grid_step = 1e-3);

}  // namespace qcr
