#include "qcr/circuit.hpp"

#include <cmath>
#include <numbers>

#include "qcr/errors.hpp"

namespace qcr {

Mat2c ry(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    Mat2c m;
    m << c, -s, s, c;
    return m;
}

Mat2c rz(double theta) {
    Mat2c m = Mat2c::Zero();
    m(0, 0) = std::polar(1.0, -theta / 2);
    m(1, 1) = std::polar(1.0, theta / 2);
    return m;
}

Vec4c run_circuit(const std::vector<Gate> &gates) {
    Vec4c psi = Vec4c::Zero();
    psi(0) = 1.0;
    for (const Gate &g : gates) {
        if (g.kind == GateKind::CZ) {
            psi(3) = -psi(3);
            continue;
        }
        const Mat2c u = g.kind == GateKind::RY ? ry(g.angle) : rz(g.angle);
        psi = (g.qubit == 0 ? kron(u, Mat2c::Identity()) : kron(Mat2c::Identity(), u)) * psi;
    }
    return psi;
}

PreparedState prep_circuit(double beta) {
    if (!(beta >= 0.0 && beta <= 0.5))
        throw DomainError("beta must lie in [0, 0.5]");
    using std::numbers::pi;
    const double g = std::atan2(std::sqrt(beta), std::sqrt(1.0 - beta));
    std::vector<Gate> gates = {
        {GateKind::RY, 0, 2 * g},  {GateKind::RY, 1, pi / 2}, {GateKind::CZ, -1, 0.0},
        {GateKind::RZ, 1, pi},     {GateKind::RY, 1, pi / 2}, {GateKind::RZ, 0, pi},
        {GateKind::RY, 0, pi / 4},
    };
    Vec4c psi = run_circuit(gates);
    return {gates, psi};
}

std::string to_string(const Gate &g) {
    if (g.kind == GateKind::CZ)
        return "CZ(A,B)";
    return std::string(g.kind == GateKind::RY ? "RY(" : "RZ(") + (g.qubit == 0 ? "A," : "B,") +
           std::to_string(g.angle) + ")";
}

}  // namespace qcr
