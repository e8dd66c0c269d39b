#pragma once

// Two-qubit statevector circuits built from RY, RZ and CZ.

#include <string>
#include <vector>

#include "qcr/qstate.hpp"

namespace qcr {

enum class GateKind { RY, RZ, CZ };

struct Gate {
    GateKind kind;
    int qubit;  // 0 = A, 1 = B; ignored for CZ
    double angle;
};

/// RY(t) = exp(-i t Y/2), RZ(t) = diag(e^{-it/2}, e^{it/2}).
Mat2c ry(double theta);
Mat2c rz(double theta);

/// Applies the gates in order to |00>.
Vec4c run_circuit(const std::vector<Gate> &gates);

struct PreparedState {
    std::vector<Gate> gates;
    Vec4c state;
};

/// RY(A, 2g) with g = atan2(sqrt beta, sqrt(1-beta)), RY(B, pi/2), CZ,
/// RZ(B, pi), RY(B, pi/2), RZ(A, pi), RY(A, pi/4). The output equals
/// family_state(beta) up to a global phase.
PreparedState prep_circuit(double beta);

std::string to_string(const Gate &g);

}  // namespace qcr
