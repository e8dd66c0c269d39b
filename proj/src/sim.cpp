#include "qcr/sim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "qcr/errors.hpp"
#include "qcr/nonlocal.hpp"
#include "qcr/tradeoff.hpp"

namespace qcr {

namespace {

Eigen::Matrix2d confusion(const ReadoutFidelity &f) {
    Eigen::Matrix2d m;
    m << f.f0, 1.0 - f.f1, 1.0 - f.f0, f.f1;
    return m;
}

Eigen::Matrix4d kron_real(const Eigen::Matrix2d &a, const Eigen::Matrix2d &b) {
    Eigen::Matrix4d k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Estimate summarize(const std::vector<double> &xs, double reference) {
    Estimate e;
    e.reference = reference;
    const double n = static_cast<double>(xs.size());
    for (double x : xs)
        e.mean += x;
    e.mean /= n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs)
            ss += (x - e.mean) * (x - e.mean);
        e.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return e;
}

struct Setting {
    MeasurementAxis a, b;
};

struct RepeatOutcome {
    std::vector<ShotCounts> counts;
    double h_qr = 0, second = 0, d_f = 0;
};

}  // namespace

DensityMatrix depolarize_each(const DensityMatrix &rho_ab, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("depolarizing probability must lie in [0, 1]");
    const Mat2c half = Mat2c::Identity() / 2.0;
    Eigen::MatrixXcd r = rho_ab.matrix();
    const DensityMatrix step1(r);
    r = (1.0 - p) * r + p * Eigen::MatrixXcd(kron(half, partial_trace(step1, Subsystem::B).matrix()));
    const DensityMatrix step2(r);
    r = (1.0 - p) * r + p * Eigen::MatrixXcd(kron(partial_trace(step2, Subsystem::A).matrix(), half));
    return DensityMatrix(r);
}

DensityMatrix noisy_state(double beta, const NoiseConfig &noise) {
    return depolarize_each(family_density(beta), noise.p_depol);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t repeat, std::uint64_t setting) {
    return splitmix64(splitmix64(splitmix64(seed) ^ repeat) ^ setting);
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::array<long, 4> sample_categorical(const Prob4 &p, long shots, std::mt19937_64 &rng) {
    if (shots < 1)
        throw DomainError("shots must be >= 1");
    std::array<double, 4> cum{};
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        acc += std::max(p[i], 0.0);
        cum[i] = acc;
    }
    std::array<long, 4> counts{};
    for (long s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * acc;
        int k = 0;
        while (k < 3 && (u >= cum[k] || p[k] <= 0.0))
            ++k;
        ++counts[k];
    }
    return counts;
}

ShotCounts sample_counts(const DensityMatrix &rho_ab, const MeasurementAxis &axis_a, const MeasurementAxis &axis_b,
                         long shots, std::mt19937_64 &rng) {
    ShotCounts sc;
    sc.counts = sample_categorical(joint_probs(rho_ab, axis_a, axis_b), shots, rng);
    sc.axis_a = axis_a.vec();
    sc.axis_b = axis_b.vec();
    sc.shots = shots;
    return sc;
}

void validate_readout(const ReadoutFidelity &f) {
    if (!(f.f0 > 0.5 && f.f0 <= 1.0 && f.f1 > 0.5 && f.f1 <= 1.0))
        throw DomainError("readout fidelities must lie in (0.5, 1]");
}

Prob4 corrupt_readout(const Prob4 &p, const ReadoutFidelity &fa, const ReadoutFidelity &fb) {
    const Eigen::Vector4d q = kron_real(confusion(fa), confusion(fb)) * Eigen::Vector4d(p[0], p[1], p[2], p[3]);
    return {q(0), q(1), q(2), q(3)};
}

Prob4 correct_readout(const Prob4 &q, const ReadoutFidelity &fa, const ReadoutFidelity &fb) {
    validate_readout(fa);
    validate_readout(fb);
    const Eigen::Matrix2d ia = confusion(fa).inverse();
    const Eigen::Matrix2d ib = confusion(fb).inverse();
    const Eigen::Vector4d v = kron_real(ia, ib) * Eigen::Vector4d(q[0], q[1], q[2], q[3]);
    Prob4 p{};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (v(i) < -0.05)
            throw DataQualityError("readout correction produced probability " + std::to_string(v(i)));
        p[i] = std::clamp(v(i), 0.0, 1.0);
        sum += p[i];
    }
    if (!(sum > 0.0))
        throw DataQualityError("readout correction produced an empty distribution");
    for (double &x : p)
        x /= sum;
    return p;
}

double miller_madow_entropy(const double *p, std::size_t n, long shots) {
    int k = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] > 0.0)
            ++k;
    const double h = shannon_entropy(p, n);
    if (k <= 1)
        return h;
    return h + (k - 1) / (2.0 * static_cast<double>(shots) * std::numbers::ln2);
}

ExperimentResult run_experiment(double beta, const ExperimentConfig &config, Mode mode) {
    if (config.shots < 1 || config.repeats < 1)
        throw DomainError("shots and repeats must be >= 1");
    validate_readout(config.readout_a);
    validate_readout(config.readout_b);
    const DensityMatrix rho = noisy_state(beta, config.noise);

    std::vector<Setting> settings;
    if (mode == Mode::Entanglement) {
        settings = {{family_Q(), MeasurementAxis::z()}, {family_R(), MeasurementAxis::x()}};
    } else {
        const CHSHSetting s = optimal_settings(family_density(beta));
        settings = {{s.A0, s.B0}, {s.A0, s.B1}, {s.A1, s.B0}, {s.A1, s.B1}};
    }

    const long shots = config.shots;
    auto one_repeat = [&](int rep) {
        RepeatOutcome out;
        std::vector<Prob4> corrected;
        for (std::size_t k = 0; k < settings.size(); ++k) {
            std::mt19937_64 rng(stream_seed(config.seed, static_cast<std::uint64_t>(rep), k));
            const Prob4 q = corrupt_readout(joint_probs(rho, settings[k].a, settings[k].b), config.readout_a,
                                            config.readout_b);
            ShotCounts sc;
            sc.counts = sample_categorical(q, shots, rng);
            sc.axis_a = settings[k].a.vec();
            sc.axis_b = settings[k].b.vec();
            sc.shots = shots;
            Prob4 f{};
            for (int i = 0; i < 4; ++i)
                f[i] = static_cast<double>(sc.counts[i]) / static_cast<double>(shots);
            corrected.push_back(correct_readout(f, config.readout_a, config.readout_b));
            out.counts.push_back(sc);
        }
        auto alice = [](const Prob4 &p) { return std::array<double, 2>{p[0] + p[1], p[2] + p[3]}; };
        auto bob = [](const Prob4 &p) { return std::array<double, 2>{p[0] + p[2], p[1] + p[3]}; };
        auto H2 = [shots](const std::array<double, 2> &p) { return miller_madow_entropy(p.data(), 2, shots); };
        auto H4 = [shots](const Prob4 &p) { return miller_madow_entropy(p.data(), 4, shots); };

        const std::size_t r_index = mode == Mode::Entanglement ? 1 : 2;
        const auto pq = alice(corrected[0]);
        out.h_qr = H2(pq) + H2(alice(corrected[r_index]));
        out.d_f = std::abs(pq[0] - pq[1]) - std::sqrt(2.0) / 2.0;
        if (mode == Mode::Entanglement) {
            out.second = (H4(corrected[0]) - H2(bob(corrected[0]))) + (H4(corrected[1]) - H2(bob(corrected[1]))) - 1.0;
        } else {
            std::array<double, 4> e{};
            for (int k = 0; k < 4; ++k) {
                const Prob4 &p = corrected[k];
                e[k] = p[0] - p[1] - p[2] + p[3];
            }
            out.second = std::abs(e[0] + e[1] + e[2] - e[3]);
        }
        return out;
    };

    std::vector<RepeatOutcome> outs(config.repeats);
    const int nthreads = std::clamp(config.threads, 1, config.repeats);
    if (nthreads == 1) {
        for (int r = 0; r < config.repeats; ++r)
            outs[r] = one_repeat(r);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (int r = t; r < config.repeats; r += nthreads)
                        outs[r] = one_repeat(r);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto &th : pool)
            th.join();
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::vector<double> hs, seconds, dfs;
    ExperimentResult res{};
    res.mode = mode;
    res.beta = beta;
    for (auto &o : outs) {
        hs.push_back(o.h_qr);
        seconds.push_back(o.second);
        dfs.push_back(o.d_f);
        res.counts.push_back(std::move(o.counts));
    }

    // closed-form references on the noisy state
    const BlochVector a = density_to_bloch(partial_trace(rho, Subsystem::A));
    res.H_QR = summarize(hs, shannon_entropy_of(a, family_Q()) + shannon_entropy_of(a, family_R()));
    res.D_f = summarize(dfs, std::abs(family_Q().dot(a)) - std::sqrt(2.0) / 2.0);
    if (mode == Mode::Entanglement) {
        res.bound = summarize(
            seconds, eur_memory_bound(rho, family_Q(), family_R(), MeasurementAxis::z(), MeasurementAxis::x()));
    } else {
        const CHSHSetting s = optimal_settings(family_density(beta));
        res.chsh = summarize(seconds, chsh_value(rho, s));
    }
    return res;
}

}  // namespace qcr
