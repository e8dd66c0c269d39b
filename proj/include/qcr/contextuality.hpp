#pragma once

// Optimal four-state sets and the preparation-contextuality criteria.

#include <array>
#include <string>

#include "qcr/qstate.hpp"

namespace qcr {

/// h((2 - sqrt2)/4), the contextuality threshold constant (~0.6009).
double contextuality_constant();

struct OptimalFrame {
    MeasurementAxis Q, R, M1, M2, M3;
};

enum class Symmetry { B2, A1SQ };

struct FourStateSet {
    std::array<BlochVector, 4> states;
    /// In-plane axes: (M1, M2) of the optimal frame for B2, (M1', M2') for A1SQ.
    MeasurementAxis axis1;
    MeasurementAxis axis2;
    Symmetry symmetry;
};

enum class VerdictTag { Contextual, Noncontextual, Inconclusive };

struct Verdict {
    VerdictTag tag;
    double witness;
    double threshold;
};

enum class RegionLabel { Nonphysical, ContextualWitnessed, Inconclusive };

std::string to_string(VerdictTag tag);
std::string to_string(RegionLabel label);
std::string to_string(Symmetry sym);

/// Unit vector perpendicular to q: normalize(e - (e.q) q), e the first of
/// x, y, z with |e.q| < 1 - 1e-9.
MeasurementAxis perpendicular_axis(const MeasurementAxis &q);

/// Q along s1 (z for s1 = 0), R by perpendicular_axis (x for s1 = 0),
/// M1 = (Q-R)/sqrt2, M2 = (Q+R)/sqrt2, M3 = M1 x M2.
OptimalFrame optimal_frame(const BlochVector &s1);

/// {s1, |s1| R, -s1, -|s1| R} with the canonical R.
FourStateSet b2_orbit_set(const BlochVector &s1);

/// Same with a caller-chosen complementary axis R (must be perpendicular to s1).
FourStateSet b2_orbit_set(const BlochVector &s1, const MeasurementAxis &R);

/// Reflections of s1 in the M1'-M2' plane: s2 flips the M1' component, s3
/// flips both, s4 flips the M2' component.
FourStateSet a1sq_orbit_set(const BlochVector &s1, const MeasurementAxis &M1p, const MeasurementAxis &M2p);

/// Witness H(Q)+H(R) in the optimal frame, threshold 1+C.
Verdict faithful_criterion(const BlochVector &s1);

/// Witness <M1>, threshold 1/2.
Verdict expectation_criterion(const BlochVector &s1);

/// Witness min(H(Q'), H(R')), threshold C. Never returns Noncontextual.
Verdict sufficient_criterion(const BlochVector &s1, const MeasurementAxis &Qp, const MeasurementAxis &Rp);

/// Witness <M1'> + <M2'>, threshold 1.
Verdict joint_predictability(const BlochVector &s1, const MeasurementAxis &M1p, const MeasurementAxis &M2p);

/// max(|P0 - P1| - sqrt2/2, 0) along the optimal Q.
double probability_difference_indicator(const BlochVector &s1);

/// Inverse of h on [0, 1/2], by bisection to 1e-12.
double inverse_binary_entropy(double h);

RegionLabel classify_region(double hQ, double hR);

}  // namespace qcr
