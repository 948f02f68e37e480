#pragma once

#include <vector>

#include "qsd/linalg.hpp"

namespace qsd {

// An ordered set of 2^n orthonormal n-qubit states. v_matrix() holds the
// states as columns, in input order, and is unitary within 1e-10 (which is
// equivalent to pairwise orthonormality). Instances are immutable; construct
// through make_ortho_set or one of the family builders.
class OrthoSet {
  public:
    int n_qubits() const { return n_qubits_; }
    int size() const { return static_cast<int>(states_.size()); }
    const std::vector<CVec>& states() const { return states_; }
    const CVec& state(int i) const { return states_.at(static_cast<size_t>(i)); }
    const CMat& v_matrix() const { return v_; }

  private:
    friend OrthoSet make_ortho_set(const std::vector<CVec>& vectors);
    OrthoSet(int n_qubits, std::vector<CVec> states, CMat v)
        : n_qubits_(n_qubits), states_(std::move(states)), v_(std::move(v)) {}

    int n_qubits_;
    std::vector<CVec> states_;
    CMat v_;
};

// Validates cardinality (a power of two, matching the state dimension) and
// orthonormality. Throws BadCardinality or NotOrthonormal.
OrthoSet make_ortho_set(const std::vector<CVec>& vectors);

// { alpha|0> + beta|1>,  beta|0> - alpha|1> }. Requires alpha^2+beta^2 = 1.
OrthoSet single_qubit_family(double alpha, double beta);

// The four two-qubit states
//   alpha|00> + beta|01>,  alpha|10> + beta|11>,
//   beta|10> - alpha|11>,  beta|00> - alpha|01>,
// in that order. Orthogonal, unentangled, without definite parity, with the
// second qubit carrying the superposition. Requires alpha^2+beta^2 = 1.
OrthoSet family_s(double alpha, double beta);

// The four Bell states: (|00>+|11>), (|00>-|11>), (|01>+|10>), (|10>-|01>),
// each normalized.
OrthoSet bell_set();

// The 2^k states (|x> +- |xbar>)/sqrt(2) for k >= 2 qubits, ordered by
// flip-class (ascending smaller binary label), "+" before "-".
OrthoSet ghz_set(int k);

}  // namespace qsd
