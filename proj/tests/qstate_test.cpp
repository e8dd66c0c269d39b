#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qcr/errors.hpp"
#include "qcr/qstate.hpp"
#include "qcr/random_states.hpp"
#include "qcr/tradeoff.hpp"

using namespace qcr;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// plain reference, no library code
double h_ref(double p) {
    if (p <= 0 || p >= 1)
        return 0.0;
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

Vec4c bell_phi_plus() {
    Vec4c v = Vec4c::Zero();
    v(0) = v(3) = 1.0 / kSqrt2;
    return v;
}

}  // namespace

TEST(BinaryEntropy, Examples) {
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
    EXPECT_NEAR(binary_entropy((2 - kSqrt2) / 4), 0.6009, 5e-5);
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
}

TEST(BinaryEntropy, OutOfRangeThrows) {
    EXPECT_THROW(binary_entropy(-1e-9), DomainError);
    EXPECT_THROW(binary_entropy(1.0 + 1e-9), DomainError);
    EXPECT_THROW(binary_entropy(std::nan("")), DomainError);
}

TEST(BlochToDensity, NorthPole) {
    const auto rho = bloch_to_density(BlochVector(0, 0, 1));
    EXPECT_NEAR(std::abs(rho(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rho(1, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, 1e-15);
}

TEST(BlochToDensity, EquationZ20) {
    const auto rho = bloch_to_density(BlochVector(0.25, std::sqrt(3.0) / 4, 0.5));
    EXPECT_NEAR(rho(0, 0).real(), 0.75, 1e-15);
    EXPECT_NEAR(rho(1, 1).real(), 0.25, 1e-15);
    EXPECT_NEAR(rho(0, 1).real(), 0.125, 1e-15);
    EXPECT_NEAR(rho(0, 1).imag(), -std::sqrt(3.0) / 8, 1e-15);
    EXPECT_NEAR(rho(1, 0).imag(), std::sqrt(3.0) / 8, 1e-15);
}

TEST(BlochToDensity, EquationJ65) {
    const auto rho = bloch_to_density(BlochVector(0.6, 0, 0));
    EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(rho(0, 1).real(), 0.3, 1e-15);
    EXPECT_NEAR(rho(1, 0).real(), 0.3, 1e-15);
    EXPECT_NEAR(rho(1, 1).real(), 0.5, 1e-15);
}

TEST(BlochToDensity, RejectsOutsideBall) {
    EXPECT_THROW(bloch_to_density(BlochVector(0.8, 0.8, 0)), DomainError);
}

TEST(BlochToDensity, CustomFrame) {
    // frame (y, z, x): s = (1,0,0) means +y
    std::array<MeasurementAxis, 3> f = {MeasurementAxis::y(), MeasurementAxis::z(), MeasurementAxis::x()};
    const auto rho = bloch_to_density(BlochVector(1, 0, 0), f);
    const auto b = density_to_bloch(rho);
    EXPECT_NEAR(b.y(), 1.0, 1e-14);
    std::array<MeasurementAxis, 3> bad = {MeasurementAxis::x(), MeasurementAxis::x(), MeasurementAxis::z()};
    EXPECT_THROW(bloch_to_density(BlochVector(0, 0, 0), bad), DomainError);
}

TEST(BlochToDensity, RoundTripProperty) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const BlochVector s = random_bloch_ball(rng);
        const BlochVector t = density_to_bloch(bloch_to_density(s));
        ASSERT_NEAR((s.vec() - t.vec()).norm(), 0.0, 1e-12);
    }
}

TEST(MeasurementAxis, RequiresUnitNorm) {
    EXPECT_THROW(MeasurementAxis(Vec3(1, 1, 0)), DomainError);
    EXPECT_NO_THROW(MeasurementAxis(Vec3(1, 0, 0)));
    EXPECT_THROW(MeasurementAxis::from_direction(Vec3::Zero()), DomainError);
}

TEST(DensityMatrix, Validation) {
    Eigen::MatrixXcd m(2, 2);
    m << 0.5, 0.1, 0.2, 0.5;  // not Hermitian
    EXPECT_THROW(DensityMatrix{m}, DomainError);
    m << 0.6, 0, 0, 0.6;  // trace 1.2
    EXPECT_THROW(DensityMatrix{m}, DomainError);
    m << 1.2, 0, 0, -0.2;  // negative eigenvalue
    EXPECT_THROW(DensityMatrix{m}, DomainError);
    Eigen::MatrixXcd m3 = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
    EXPECT_THROW(DensityMatrix{m3}, DomainError);
}

TEST(MeasurementProbs, Examples) {
    auto p = measurement_probs(BlochVector(0, 0, 1), MeasurementAxis::z());
    EXPECT_DOUBLE_EQ(p.p_plus, 1.0);
    EXPECT_DOUBLE_EQ(p.p_minus, 0.0);
    p = measurement_probs(BlochVector(0, 0.6, 0.6), MeasurementAxis::from_direction(Vec3(0, 1, 1)));
    EXPECT_NEAR(p.p_minus, (5 - 3 * kSqrt2) / 10, 1e-15);
    p = measurement_probs(BlochVector(0, 0, 0), MeasurementAxis::from_direction(Vec3(1, 2, 3)));
    EXPECT_DOUBLE_EQ(p.p_plus, 0.5);
    EXPECT_DOUBLE_EQ(p.p_minus, 0.5);
}

TEST(ShannonEntropyOf, Examples) {
    EXPECT_NEAR(shannon_entropy_of(BlochVector(0, 0, 0.6), MeasurementAxis::z()), h_ref(0.2), 1e-14);
    EXPECT_NEAR(shannon_entropy_of(BlochVector(0, 0, 0.6), MeasurementAxis::z()), 0.7219, 5e-5);
    const double v = shannon_entropy_of(BlochVector(0, 0.6, 0.6), MeasurementAxis::from_direction(Vec3(1, 0, 1)));
    EXPECT_NEAR(v, h_ref((10 - 3 * kSqrt2) / 20), 1e-14);
    EXPECT_NEAR(v, 0.8660, 5e-5);
    EXPECT_DOUBLE_EQ(shannon_entropy_of(BlochVector(0.3, 0, 0), MeasurementAxis::z()), 1.0);
}

TEST(VonNeumann, Examples) {
    EXPECT_NEAR(von_neumann_entropy(bloch_to_density(BlochVector(0, 0, 1))), 0.0, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(4)), 2.0, 1e-12);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = 0.9;
    m(1, 1) = 0.1;
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(m)), h_ref(0.1), 1e-14);
    EXPECT_NEAR(h_ref(0.1), 0.4690, 5e-5);
}

TEST(HermitianEigen2x2, MatchesIterativeSolver) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto rho = random_ginibre_density(2, 2, rng);
        const auto ev = hermitian_eigenvalues_2x2(rho.matrix());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
        ASSERT_NEAR(ev[0], es.eigenvalues()(0), 1e-12);
        ASSERT_NEAR(ev[1], es.eigenvalues()(1), 1e-12);
    }
}

TEST(PartialTrace, Examples) {
    Vec4c v00 = Vec4c::Zero();
    v00(0) = 1;
    auto r = partial_trace(DensityMatrix::pure(v00), Subsystem::A);
    EXPECT_NEAR(r(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(r(1, 1)), 0.0, 1e-15);

    r = partial_trace(DensityMatrix::pure(bell_phi_plus()), Subsystem::A);
    EXPECT_NEAR((r.matrix() - Eigen::MatrixXcd::Identity(2, 2) / 2.0).norm(), 0.0, 1e-15);

    r = partial_trace(family_density(0.1), Subsystem::B);
    EXPECT_NEAR(r(0, 0).real(), 0.9, 1e-14);
    EXPECT_NEAR(r(1, 1).real(), 0.1, 1e-14);
    EXPECT_NEAR(std::abs(r(0, 1)), 0.0, 1e-14);
}

TEST(PartialTrace, NonSymmetricProduct) {
    // |0><0| (x) |+><+|: A keeps diag(1,0), B keeps |+><+|
    const Mat2c a = bloch_to_density(BlochVector(0, 0, 1)).matrix();
    const Mat2c b = bloch_to_density(BlochVector(1, 0, 0)).matrix();
    const DensityMatrix rho{Eigen::MatrixXcd(kron(a, b))};
    EXPECT_NEAR((partial_trace(rho, Subsystem::A).matrix() - Eigen::MatrixXcd(a)).norm(), 0.0, 1e-15);
    EXPECT_NEAR((partial_trace(rho, Subsystem::B).matrix() - Eigen::MatrixXcd(b)).norm(), 0.0, 1e-15);
}

TEST(ConditionalEntropy, Examples) {
    EXPECT_NEAR(conditional_entropy(DensityMatrix::pure(bell_phi_plus())), -1.0, 1e-12);
    EXPECT_NEAR(conditional_entropy(DensityMatrix::maximally_mixed(4)), 1.0, 1e-12);
    Vec4c v = Vec4c::Zero();
    v(1) = 1;
    EXPECT_NEAR(conditional_entropy(DensityMatrix::pure(v)), 0.0, 1e-12);
}

TEST(Schmidt, Examples) {
    for (double beta : {0.0, 0.1, 0.21, 0.5}) {
        const auto [l1, l2] = schmidt_coefficients(family_state(beta));
        EXPECT_NEAR(l1, 1 - beta, 1e-12);
        EXPECT_NEAR(l2, beta, 1e-12);
    }
    Vec4c v = Vec4c::Zero();
    v(1) = 1;
    auto [a, b] = schmidt_coefficients(v);
    EXPECT_NEAR(a, 1.0, 1e-15);
    EXPECT_NEAR(b, 0.0, 1e-15);
    std::tie(a, b) = schmidt_coefficients(bell_phi_plus());
    EXPECT_NEAR(a, 0.5, 1e-15);
    EXPECT_NEAR(b, 0.5, 1e-15);
    EXPECT_THROW(schmidt_coefficients(2.0 * bell_phi_plus()), DomainError);
}

TEST(Properties, PureStateMarginalEntropiesAgree) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const Vec4c psi = random_pure_state(4, rng);
        const DensityMatrix rho = DensityMatrix::pure(psi);
        const double sa = von_neumann_entropy(partial_trace(rho, Subsystem::A));
        const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::B));
        ASSERT_NEAR(sa, sb, 1e-10);
        const auto [l1, l2] = schmidt_coefficients(psi);
        ASSERT_NEAR(l1 + l2, 1.0, 1e-10);
        ASSERT_GE(l1, l2);
        ASSERT_NEAR(sa, h_ref(l2), 1e-9);
    }
}

TEST(Properties, Concavity) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const int dim = i % 2 ? 4 : 2;
        const auto r1 = random_ginibre_density(dim, 1 + i % dim, rng);
        const auto r2 = random_ginibre_density(dim, dim, rng);
        const double p = u(rng);
        const DensityMatrix mix(p * r1.matrix() + (1 - p) * r2.matrix());
        ASSERT_GE(von_neumann_entropy(mix) + 1e-10, p * von_neumann_entropy(r1) + (1 - p) * von_neumann_entropy(r2));
    }
}

TEST(Properties, Subadditivity) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const auto rho = random_ginibre_density(4, 1 + i % 4, rng);
        const double sab = von_neumann_entropy(rho);
        const double sa = von_neumann_entropy(partial_trace(rho, Subsystem::A));
        const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::B));
        ASSERT_LE(std::abs(sa - sb), sab + 1e-10);
        ASSERT_LE(sab, sa + sb + 1e-10);
    }
}

TEST(JointProbs, ProductAndBell) {
    const auto p = joint_probs(DensityMatrix::pure(bell_phi_plus()), MeasurementAxis::z(), MeasurementAxis::z());
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.0, 1e-15);
    EXPECT_NEAR(p[2], 0.0, 1e-15);
    EXPECT_NEAR(p[3], 0.5, 1e-15);
    // |0>|1>: A always +, B always -
    Vec4c v = Vec4c::Zero();
    v(1) = 1;
    const auto q = joint_probs(DensityMatrix::pure(v), MeasurementAxis::z(), MeasurementAxis::z());
    EXPECT_NEAR(q[1], 1.0, 1e-15);
}
