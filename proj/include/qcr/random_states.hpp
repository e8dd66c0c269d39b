#pragma once

// Seeded random states for property checks.

#include <random>

#include "qcr/qstate.hpp"

namespace qcr {

/// Uniform point in the unit Bloch ball.
BlochVector random_bloch_ball(std::mt19937_64 &rng);

/// Uniform point on the unit sphere.
Vec3 random_unit_vector(std::mt19937_64 &rng);

/// Haar-random pure state of the given dimension (normalized complex Gaussian).
Eigen::VectorXcd random_pure_state(int dim, std::mt19937_64 &rng);

/// G G^dagger / tr with G a dim x dim complex Ginibre matrix of the given rank
/// (rank = number of columns of G).
DensityMatrix random_ginibre_density(int dim, int rank, std::mt19937_64 &rng);

/// Haar-random 2x2 unitary.
Mat2c random_unitary_2x2(std::mt19937_64 &rng);

}  // namespace qcr
