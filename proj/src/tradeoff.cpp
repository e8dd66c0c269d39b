#include "qcr/tradeoff.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "qcr/contextuality.hpp"
#include "qcr/errors.hpp"
#include "qcr/nonlocal.hpp"

namespace qcr {

Vec4c family_state(double beta) {
    if (!(beta >= 0.0 && beta <= 0.5))
        throw DomainError("beta must lie in [0, 0.5]");
    const double c = std::cos(std::numbers::pi / 8), s = std::sin(std::numbers::pi / 8);
    const double ra = std::sqrt(1.0 - beta), rb = std::sqrt(beta);
    // |phi1>|0> and |phi2>|1>, index 2a + b
    Vec4c psi;
    psi << ra * c, rb * s, ra * s, -rb * c;
    return psi;
}

DensityMatrix family_density(double beta) {
    return DensityMatrix::pure(family_state(beta));
}

MeasurementAxis family_Q() {
    return MeasurementAxis::from_direction(Vec3(1, 0, 1));
}

MeasurementAxis family_R() {
    return MeasurementAxis::from_direction(Vec3(-1, 0, 1));
}

double h_qr(const DensityMatrix &rho_ab) {
    const BlochVector a = density_to_bloch(partial_trace(rho_ab, Subsystem::A));
    const OptimalFrame f = optimal_frame(a);
    return shannon_entropy_of(a, f.Q) + shannon_entropy_of(a, f.R);
}

double theorem2_value(const DensityMatrix &rho_ab) {
    return h_qr(rho_ab) + conditional_entropy(rho_ab);
}

double theorem3_value(const DensityMatrix &rho_ab) {
    return h_qr(rho_ab) + 2.0 - chsh_max(rho_ab);
}

std::string round4(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
    std::string s(buf, res.ptr);
    if (s == "-0.0000")
        s = "0.0000";
    return s;
}

const std::vector<double> &default_betas() {
    static const std::vector<double> b = {0.0, 0.02, 0.04, 0.06, 0.08, 0.10, 0.12,
                                          0.16, 0.21, 0.26, 0.31, 0.37, 0.5};
    return b;
}

TradeoffRow tradeoff_row(double beta) {
    const DensityMatrix rho = family_density(beta);
    TradeoffRow r{};
    r.beta = beta;
    r.H_QR = h_qr(rho);
    r.S_AB_bound = eur_memory_bound(rho, family_Q(), family_R(), MeasurementAxis::z(), MeasurementAxis::x());
    r.chsh_max = chsh_max(rho);
    r.t2 = theorem2_value(rho);
    r.t3 = theorem3_value(rho);
    r.rounded = {round4(r.beta), round4(r.H_QR), round4(r.S_AB_bound), round4(r.chsh_max), round4(r.t2),
                 round4(r.t3)};
    return r;
}

std::vector<TradeoffRow> sweep(const std::vector<double> &betas) {
    for (double b : betas)
        if (!(b >= 0.0 && b <= 0.5))
            throw DomainError("beta must lie in [0, 0.5]");
    std::vector<TradeoffRow> rows;
    rows.reserve(betas.size());
    for (double b : betas)
        rows.push_back(tradeoff_row(b));
    return rows;
}

}  // namespace qcr
