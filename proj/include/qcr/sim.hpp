#pragma once

// Shot-based replica of the two-qubit experiments: per-qubit depolarizing
// noise, multinomial sampling, readout confusion and its inversion.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "qcr/qstate.hpp"

namespace qcr {

struct NoiseConfig {
    double p_depol = 0.0076;
};

/// Confusion matrix F = [[f0, 1-f1], [1-f0, f1]] (column = true outcome).
struct ReadoutFidelity {
    double f0 = 1.0;
    double f1 = 1.0;
};

enum class Mode { Entanglement, Bell };

struct ExperimentConfig {
    long shots = 3000;
    int repeats = 30;
    std::uint64_t seed = 0;
    NoiseConfig noise;
    ReadoutFidelity readout_a;
    ReadoutFidelity readout_b;
    int threads = 1;
};

struct ShotCounts {
    std::array<long, 4> counts{};  // ++, +-, -+, --
    Vec3 axis_a = Vec3::Zero();
    Vec3 axis_b = Vec3::Zero();
    long shots = 0;
};

using Prob4 = std::array<double, 4>;

/// Independent depolarizing channel on each qubit of family_state(beta):
/// rho -> (1-p) rho + p I/2 (x) rho_B, then the same on B.
DensityMatrix noisy_state(double beta, const NoiseConfig &noise);

/// Same channel applied to an arbitrary two-qubit state.
DensityMatrix depolarize_each(const DensityMatrix &rho_ab, double p);

/// splitmix64 mix of (seed, repeat, setting).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t repeat, std::uint64_t setting);

/// (x >> 11) * 2^-53.
double uniform01(std::mt19937_64 &rng);

/// One categorical draw per shot from a 4-outcome distribution.
std::array<long, 4> sample_categorical(const Prob4 &p, long shots, std::mt19937_64 &rng);

ShotCounts sample_counts(const DensityMatrix &rho_ab, const MeasurementAxis &axis_a, const MeasurementAxis &axis_b,
                         long shots, std::mt19937_64 &rng);

/// Throws DomainError unless f0, f1 in (0.5, 1].
void validate_readout(const ReadoutFidelity &f);

/// q = (F_A (x) F_B) p.
Prob4 corrupt_readout(const Prob4 &p, const ReadoutFidelity &fa, const ReadoutFidelity &fb);

/// p = (F_A (x) F_B)^-1 q; negatives down to -0.05 are clipped and the result
/// renormalized, anything lower raises DataQualityError.
Prob4 correct_readout(const Prob4 &q, const ReadoutFidelity &fa, const ReadoutFidelity &fb);

/// Plug-in entropy in bits plus the Miller-Madow term (K_obs - 1)/(2 N ln 2).
double miller_madow_entropy(const double *p, std::size_t n, long shots);

struct Estimate {
    double mean = 0.0;
    double se = 0.0;         // sample std (ddof 1) / sqrt(repeats)
    double reference = 0.0;  // closed form on the noisy state
};

struct ExperimentResult {
    Mode mode;
    double beta;
    Estimate H_QR;
    Estimate bound;  // Entanglement mode only
    Estimate chsh;   // Bell mode only
    Estimate D_f;    // |P0 - P1| - sqrt2/2 along Q (signed)
    std::vector<std::vector<ShotCounts>> counts;  // [repeat][setting]
};

/// Runs `repeats` independent experiments on noisy_state(beta). Entanglement
/// mode measures (Q, z) and (R, x); Bell mode measures (A_i, B_j) with the
/// optimal settings of the ideal state. Repeats may run on several threads;
/// results do not depend on the thread count.
ExperimentResult run_experiment(double beta, const ExperimentConfig &config, Mode mode);

}  // namespace qcr
