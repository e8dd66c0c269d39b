#include "qcr/contextuality.hpp"

#include <algorithm>
#include <cmath>

#include "qcr/errors.hpp"

namespace qcr {

namespace {

constexpr double kBoundaryTol = 1e-12;
constexpr double kOrthoTol = 1e-10;

void require_state(const BlochVector &s) {
    if (!s.is_state())
        throw DomainError("Bloch vector has norm > 1");
}

void require_orthogonal(const MeasurementAxis &a, const MeasurementAxis &b) {
    if (std::abs(a.dot(b)) > kOrthoTol)
        throw DomainError("measurement axes are not orthogonal");
}

// strict "witness < threshold" with ties going to the noncontextual side
bool strictly_below(double witness, double threshold) {
    return witness < threshold - kBoundaryTol;
}

}  // namespace

double contextuality_constant() {
    static const double c = binary_entropy((2.0 - std::sqrt(2.0)) / 4.0);
    return c;
}

std::string to_string(VerdictTag tag) {
    switch (tag) {
    case VerdictTag::Contextual:
        return "Contextual";
    case VerdictTag::Noncontextual:
        return "Noncontextual";
    case VerdictTag::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

std::string to_string(RegionLabel label) {
    switch (label) {
    case RegionLabel::Nonphysical:
        return "Nonphysical";
    case RegionLabel::ContextualWitnessed:
        return "ContextualWitnessed";
    case RegionLabel::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

std::string to_string(Symmetry sym) {
    return sym == Symmetry::B2 ? "B2" : "A1SQ";
}

MeasurementAxis perpendicular_axis(const MeasurementAxis &q) {
    for (const Vec3 &e : {Vec3(Vec3::UnitX()), Vec3(Vec3::UnitY()), Vec3(Vec3::UnitZ())}) {
        const double d = e.dot(q.vec());
        if (std::abs(d) < 1.0 - 1e-9)
            return MeasurementAxis::from_direction(e - d * q.vec());
    }
    // unreachable: a unit vector cannot be parallel to all three axes
    throw DomainError("no perpendicular axis found");
}

OptimalFrame optimal_frame(const BlochVector &s1) {
    require_state(s1);
    const double n = s1.norm();
    const MeasurementAxis Q = n > 0.0 ? MeasurementAxis::from_direction(s1.vec()) : MeasurementAxis::z();
    const MeasurementAxis R = n > 0.0 ? perpendicular_axis(Q) : MeasurementAxis::x();
    const double r2 = std::sqrt(2.0);
    const MeasurementAxis M1 = MeasurementAxis::from_direction((Q.vec() - R.vec()) / r2);
    const MeasurementAxis M2 = MeasurementAxis::from_direction((Q.vec() + R.vec()) / r2);
    const MeasurementAxis M3 = MeasurementAxis::from_direction(M1.vec().cross(M2.vec()));
    return {Q, R, M1, M2, M3};
}

FourStateSet b2_orbit_set(const BlochVector &s1) {
    return b2_orbit_set(s1, optimal_frame(s1).R);
}

FourStateSet b2_orbit_set(const BlochVector &s1, const MeasurementAxis &R) {
    require_state(s1);
    const double n = s1.norm();
    if (n > 0.0 && std::abs(R.dot(s1)) > kOrthoTol * std::max(1.0, n))
        throw DomainError("complementary axis R is not perpendicular to the state");
    const Vec3 s = s1.vec();
    const Vec3 r = n * R.vec();
    const MeasurementAxis Q = n > 0.0 ? MeasurementAxis::from_direction(s) : MeasurementAxis::z();
    const double r2 = std::sqrt(2.0);
    return {{BlochVector(s), BlochVector(r), BlochVector(Vec3(-s)), BlochVector(Vec3(-r))},
            MeasurementAxis::from_direction((Q.vec() - R.vec()) / r2),
            MeasurementAxis::from_direction((Q.vec() + R.vec()) / r2),
            Symmetry::B2};
}

FourStateSet a1sq_orbit_set(const BlochVector &s1, const MeasurementAxis &M1p, const MeasurementAxis &M2p) {
    require_state(s1);
    require_orthogonal(M1p, M2p);
    const Vec3 s = s1.vec();
    const Vec3 u = s.dot(M1p.vec()) * M1p.vec();
    const Vec3 w = s.dot(M2p.vec()) * M2p.vec();
    return {{BlochVector(s), BlochVector(Vec3(s - 2 * u)), BlochVector(Vec3(s - 2 * u - 2 * w)),
             BlochVector(Vec3(s - 2 * w))},
            M1p,
            M2p,
            Symmetry::A1SQ};
}

Verdict faithful_criterion(const BlochVector &s1) {
    const OptimalFrame f = optimal_frame(s1);
    const double w = shannon_entropy_of(s1, f.Q) + shannon_entropy_of(s1, f.R);
    const double t = 1.0 + contextuality_constant();
    return {strictly_below(w, t) ? VerdictTag::Contextual : VerdictTag::Noncontextual, w, t};
}

Verdict expectation_criterion(const BlochVector &s1) {
    const OptimalFrame f = optimal_frame(s1);
    const double w = f.M1.dot(s1);
    return {strictly_below(0.5, w) ? VerdictTag::Contextual : VerdictTag::Noncontextual, w, 0.5};
}

Verdict sufficient_criterion(const BlochVector &s1, const MeasurementAxis &Qp, const MeasurementAxis &Rp) {
    require_state(s1);
    require_orthogonal(Qp, Rp);
    const double w = std::min(shannon_entropy_of(s1, Qp), shannon_entropy_of(s1, Rp));
    const double t = contextuality_constant();
    return {strictly_below(w, t) ? VerdictTag::Contextual : VerdictTag::Inconclusive, w, t};
}

Verdict joint_predictability(const BlochVector &s1, const MeasurementAxis &M1p, const MeasurementAxis &M2p) {
    require_state(s1);
    require_orthogonal(M1p, M2p);
    const double w = M1p.dot(s1) + M2p.dot(s1);
    return {strictly_below(1.0, w) ? VerdictTag::Contextual : VerdictTag::Noncontextual, w, 1.0};
}

double probability_difference_indicator(const BlochVector &s1) {
    const OptimalFrame f = optimal_frame(s1);
    const ProbPair p = measurement_probs(s1, f.Q);
    return std::max(std::abs(p.p_plus - p.p_minus) - std::sqrt(2.0) / 2.0, 0.0);
}

double inverse_binary_entropy(double h) {
    if (!(h >= 0.0 && h <= 1.0))
        throw DomainError("entropy must lie in [0, 1]");
    // h rounds to 1 within ~1e-8 of 1/2, bisection can't get closer
    if (h == 1.0)
        return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < h)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

RegionLabel classify_region(double hQ, double hR) {
    const double x = 1.0 - 2.0 * inverse_binary_entropy(hQ);
    const double y = 1.0 - 2.0 * inverse_binary_entropy(hR);
    if (x * x + y * y > 1.0 + 1e-9)
        return RegionLabel::Nonphysical;
    if (std::min(hQ, hR) < contextuality_constant())
        return RegionLabel::ContextualWitnessed;
    return RegionLabel::Inconclusive;
}

}  // namespace qcr
