#pragma once

#include <string>
#include <vector>

#include "qsd/linalg.hpp"

namespace qsd {

// Gate primitives over a qubit register. Qubit indices are 1-based, qubit 1
// being the most significant bit of the basis index.
enum class GateKind { H, X, Cnot, Cz, CuBlock };

struct Gate {
    GateKind kind = GateKind::H;
    int q0 = 0;                // H/X: target. Cnot/CuBlock: control. Cz: first qubit.
    int q1 = 0;                // Cnot: target. Cz: second qubit.
    std::vector<int> targets;  // CuBlock targets; targets[0] is the block's MSB.
    CMat block;                // CuBlock unitary on the target qubits.

    static Gate h(int q);
    static Gate x(int q);
    static Gate cnot(int control, int target);
    static Gate cz(int a, int b);
    // Throws NotUnitary if u fails the 1e-10 unitarity check.
    static Gate cu(int control, std::vector<int> targets, CMat u);
};

using GateSeq = std::vector<Gate>;

std::string gate_name(GateKind kind);

}  // namespace qsd
