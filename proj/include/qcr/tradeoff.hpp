#pragma once

// Trade-off relations between local preparation contextuality and
// entanglement / Bell nonlocality, and the beta-family sweep.

#include <array>
#include <string>
#include <vector>

#include "qcr/qstate.hpp"

namespace qcr {

/// sqrt(1-beta)|phi1>|0> + sqrt(beta)|phi2>|1>,
/// phi1 = (cos pi/8, sin pi/8), phi2 = (sin pi/8, -cos pi/8).
/// Throws DomainError for beta outside [0, 0.5].
Vec4c family_state(double beta);

DensityMatrix family_density(double beta);

/// Alice's axes for the family: Q = (X+Z)/sqrt2, R = (Z-X)/sqrt2.
MeasurementAxis family_Q();
MeasurementAxis family_R();

/// H(Q) + H(R) on rho_A in its canonical optimal frame (= 1 + S(A)).
double h_qr(const DensityMatrix &rho_ab);

/// H_QR(A) + S(A|B), in [1, 3].
double theorem2_value(const DensityMatrix &rho_ab);

/// H_QR(A) + 2 - chsh_max, in [1, 4].
double theorem3_value(const DensityMatrix &rho_ab);

struct TradeoffRow {
    double beta;
    double H_QR;
    double S_AB_bound;
    double chsh_max;
    double t2;
    double t3;
    /// The six values above rounded to 4 decimals.
    std::array<std::string, 6> rounded;
};

/// Fixed 4-decimal rendering, '.' separator, no "-0.0000".
std::string round4(double v);

/// The 13 betas of the experiment.
const std::vector<double> &default_betas();

TradeoffRow tradeoff_row(double beta);

std::vector<TradeoffRow> sweep(const std::vector<double> &betas);

}  // namespace qcr
