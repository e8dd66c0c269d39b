#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qcr/errors.hpp"
#include "qcr/nonlocal.hpp"
#include "qcr/random_states.hpp"
#include "qcr/tradeoff.hpp"

using namespace qcr;

namespace {

const double kSqrt2 = std::sqrt(2.0);

DensityMatrix bell() {
    Vec4c v = Vec4c::Zero();
    v(0) = v(3) = 1 / kSqrt2;
    return DensityMatrix::pure(v);
}

DensityMatrix schmidt_state(double l1) {
    Vec4c v = Vec4c::Zero();
    v(0) = std::sqrt(l1);
    v(3) = std::sqrt(1 - l1);
    return DensityMatrix::pure(v);
}

DensityMatrix local_rotate(const DensityMatrix &rho, const Mat2c &ua, const Mat2c &ub) {
    const Mat4c u = kron(ua, ub);
    return DensityMatrix(Eigen::MatrixXcd(u * rho.matrix() * u.adjoint()));
}

}  // namespace

TEST(CorrelationMatrix, Examples) {
    Eigen::Matrix3d expect = Eigen::Vector3d(1, -1, 1).asDiagonal();
    EXPECT_NEAR((correlation_matrix(bell()) - expect).norm(), 0.0, 1e-14);
    EXPECT_NEAR(correlation_matrix(DensityMatrix::maximally_mixed(4)).norm(), 0.0, 1e-15);
    const double l1 = 0.7, c = 2 * std::sqrt(l1 * (1 - l1));
    expect = Eigen::Vector3d(c, -c, 1).asDiagonal();
    EXPECT_NEAR((correlation_matrix(schmidt_state(l1)) - expect).norm(), 0.0, 1e-14);
}

TEST(Horodecki, Examples) {
    EXPECT_NEAR(horodecki_parameter(correlation_matrix(bell())), 2.0, 1e-14);
    EXPECT_NEAR(horodecki_parameter(Eigen::Matrix3d::Zero()), 0.0, 1e-15);
    for (double b : {0.0, 0.1, 0.26, 0.5})
        EXPECT_NEAR(horodecki_parameter(correlation_matrix(family_density(b))), 1 + 4 * b * (1 - b), 1e-12);
}

TEST(ChshMax, Examples) {
    EXPECT_NEAR(chsh_max(family_density(0.1)), 2.3324, 5e-5);
    EXPECT_NEAR(chsh_max(family_density(0.5)), 2 * kSqrt2, 1e-12);
    Vec4c v = Vec4c::Zero();
    v(1) = 1;
    EXPECT_NEAR(chsh_max(DensityMatrix::pure(v)), 2.0, 1e-9);
}

TEST(OptimalSettings, TableS4Columns) {
    // a0 = sin(chi), c0 = cos(chi), tan(chi) = sqrt(4 b (1-b))
    for (double b : {0.02, 0.1, 0.26, 0.5}) {
        const auto s = optimal_settings(family_density(b));
        const double chi = std::atan(std::sqrt(4 * b * (1 - b)));
        EXPECT_NEAR(s.B0.vec()(0), std::sin(chi), 1e-10);
        EXPECT_NEAR(s.B0.vec()(1), 0.0, 1e-10);
        EXPECT_NEAR(s.B0.vec()(2), std::cos(chi), 1e-10);
        EXPECT_NEAR(s.B1.vec()(0), -std::sin(chi), 1e-10);
        EXPECT_NEAR(s.B1.vec()(2), std::cos(chi), 1e-10);
    }
    auto s = optimal_settings(family_density(0.02));
    EXPECT_NEAR(s.B0.vec()(0), 0.2696, 5e-5);
    EXPECT_NEAR(s.B0.vec()(2), 0.9630, 5e-5);
    s = optimal_settings(family_density(0.5));
    EXPECT_NEAR(s.B0.vec()(0), 0.7071, 5e-5);
    EXPECT_NEAR(s.B0.vec()(2), 0.7071, 5e-5);
}

TEST(OptimalSettings, ProductStateAndBell) {
    const auto s0 = optimal_settings(family_density(0.0));
    EXPECT_NEAR(chsh_value(family_density(0.0), s0), 2.0, 1e-12);
    EXPECT_NEAR(s0.B0.vec()(2), 1.0, 1e-12);
    const auto sb = optimal_settings(bell());
    EXPECT_NEAR(chsh_value(bell(), sb), 2 * kSqrt2, 1e-12);
    EXPECT_THROW(optimal_settings(DensityMatrix::maximally_mixed(4)), DomainError);
}

TEST(ChshValue, Examples) {
    const CHSHSetting s{MeasurementAxis::z(), MeasurementAxis::x(), MeasurementAxis::from_direction(Vec3(1, 0, 1)),
                        MeasurementAxis::from_direction(Vec3(-1, 0, 1))};
    EXPECT_NEAR(chsh_value(bell(), s), 2 * kSqrt2, 1e-12);
    EXPECT_NEAR(chsh_value(DensityMatrix::maximally_mixed(4), s), 0.0, 1e-15);
    const auto rho = family_density(0.1);
    EXPECT_NEAR(chsh_value(rho, optimal_settings(rho)), 2.3324, 5e-5);
}

TEST(ChshValue, MatchesJointProbabilityCorrelators) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const auto rho = random_ginibre_density(4, 1 + i % 4, rng);
        const MeasurementAxis a = MeasurementAxis::from_direction(random_unit_vector(rng));
        const MeasurementAxis b = MeasurementAxis::from_direction(random_unit_vector(rng));
        const auto p = joint_probs(rho, a, b);
        const double e = p[0] - p[1] - p[2] + p[3];
        const CorrelationMatrix T = correlation_matrix(rho);
        ASSERT_NEAR(e, a.vec().dot(T * b.vec()), 1e-12);
    }
}

TEST(EurBound, Examples) {
    const MeasurementAxis z = MeasurementAxis::z(), x = MeasurementAxis::x();
    EXPECT_NEAR(eur_memory_bound(family_density(0.5), family_Q(), family_R(), z, x), -1.0, 1e-12);
    EXPECT_NEAR(eur_memory_bound(family_density(0.0), family_Q(), family_R(), z, x), 0.0, 1e-12);
    EXPECT_NEAR(eur_memory_bound(family_density(0.1), family_Q(), family_R(), z, x), -0.2781, 5e-5);
}

TEST(OptimizeMemory, FamilyPicksZAndX) {
    const auto rho = family_density(0.25);
    const auto r = optimize_memory_measurements(rho, family_Q(), family_R());
    const double closed = eur_memory_bound(rho, family_Q(), family_R(), MeasurementAxis::z(), MeasurementAxis::x());
    EXPECT_NEAR(r.bound, closed, 1e-6);
    EXPECT_NEAR(std::abs(r.MBp.vec()(2)), 1.0, 1e-4);
    EXPECT_NEAR(std::abs(r.MB.vec()(0)), 1.0, 1e-4);
}

TEST(OptimizeMemory, ProductAndMixed) {
    Vec4c v = Vec4c::Zero();
    v(0) = 1;
    const auto prod = DensityMatrix::pure(v);
    // Q = z on |0>: H(Q|.) = 0; R = x: H(R|.) = 1
    const auto r = optimize_memory_measurements(prod, MeasurementAxis::z(), MeasurementAxis::x());
    EXPECT_NEAR(r.bound, 0.0, 1e-9);
    const auto m = optimize_memory_measurements(DensityMatrix::maximally_mixed(4), MeasurementAxis::z(),
                                                MeasurementAxis::x());
    EXPECT_NEAR(m.bound, 1.0, 1e-12);
    // ties resolve to the first grid point
    EXPECT_NEAR(m.theta, -std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(m.phi, -std::numbers::pi, 1e-12);
}

TEST(Properties, BoundAboveConditionalEntropy) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 300; ++i) {
        const DensityMatrix rho = i % 2 ? random_ginibre_density(4, 1 + i % 4, rng)
                                        : DensityMatrix::pure(random_pure_state(4, rng));
        const MeasurementAxis q = MeasurementAxis::from_direction(random_unit_vector(rng));
        Vec3 rv = random_unit_vector(rng);
        rv -= rv.dot(q.vec()) * q.vec();
        const MeasurementAxis r = MeasurementAxis::from_direction(rv);
        const MeasurementAxis b1 = MeasurementAxis::from_direction(random_unit_vector(rng));
        const MeasurementAxis b2 = MeasurementAxis::from_direction(random_unit_vector(rng));
        ASSERT_GE(eur_memory_bound(rho, q, r, b1, b2), conditional_entropy(rho) - 1e-9);
    }
}

TEST(Properties, OptimalSettingsReachMaximum) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 500; ++i) {
        const DensityMatrix rho = i % 2 ? random_ginibre_density(4, 1 + i % 4, rng)
                                        : DensityMatrix::pure(random_pure_state(4, rng));
        const double cm = chsh_max(rho);
        ASSERT_LE(cm, 2 * kSqrt2 + 1e-9);
        ASSERT_NEAR(chsh_value(rho, optimal_settings(rho)), cm, 1e-8);
    }
}

TEST(Properties, PureStates) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 500; ++i) {
        const Vec4c psi = random_pure_state(4, rng);
        const auto [l1, l2] = schmidt_coefficients(psi);
        ASSERT_NEAR(chsh_max(DensityMatrix::pure(psi)), 2 * std::sqrt(1 + 4 * l1 * l2), 1e-9);
        // product of random local states
        const Eigen::VectorXcd a = random_pure_state(2, rng), b = random_pure_state(2, rng);
        Vec4c prod;
        prod << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
        ASSERT_NEAR(chsh_max(DensityMatrix::pure(prod)), 2.0, 1e-9);
    }
}

TEST(Properties, LocalUnitaryInvariance) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 200; ++i) {
        const auto rho = random_ginibre_density(4, 1 + i % 4, rng);
        const auto rot = local_rotate(rho, random_unitary_2x2(rng), random_unitary_2x2(rng));
        ASSERT_NEAR(chsh_max(rot), chsh_max(rho), 1e-9);
        ASSERT_NEAR(conditional_entropy(rot), conditional_entropy(rho), 1e-9);
    }
}
