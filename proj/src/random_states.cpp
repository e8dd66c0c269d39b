#include "qcr/random_states.hpp"

#include <cmath>

#include "qcr/errors.hpp"

namespace qcr {

namespace {

Complex cgauss(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

}  // namespace

Vec3 random_unit_vector(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec3 v;
    do {
        v = Vec3(n(rng), n(rng), n(rng));
    } while (v.norm() < 1e-12);
    return v.normalized();
}

BlochVector random_bloch_ball(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Vec3 dir = random_unit_vector(rng);
    return BlochVector(Vec3(std::cbrt(u(rng)) * dir));
}

Eigen::VectorXcd random_pure_state(int dim, std::mt19937_64 &rng) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i)
        v(i) = cgauss(rng);
    return v / v.norm();
}

DensityMatrix random_ginibre_density(int dim, int rank, std::mt19937_64 &rng) {
    if (rank < 1 || rank > dim)
        throw DomainError("rank must lie in [1, dim]");
    Eigen::MatrixXcd g(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j)
            g(i, j) = cgauss(rng);
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(m);
}

Mat2c random_unitary_2x2(std::mt19937_64 &rng) {
    Mat2c g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            g(i, j) = cgauss(rng);
    Eigen::HouseholderQR<Mat2c> qr(g);
    Mat2c q = qr.householderQ();
    const Mat2c r = qr.matrixQR();
    // fix column phases so the distribution is Haar
    for (int j = 0; j < 2; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0)
            q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace qcr
