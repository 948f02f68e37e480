#pragma once

#include <vector>

#include "qsd/gates.hpp"
#include "qsd/linalg.hpp"
#include "qsd/orthoset.hpp"

namespace qsd {

// n eigenvalue arrays of length 2^n with entries +-1, one per discrimination
// operator. A valid set is balanced per array, pairwise distinct up to
// complement, and assigns every state a distinct signature (the tuple of its
// n eigenvalues), so the signature map state -> ancilla bits is a bijection.
class EigenArraySet {
  public:
    int n() const { return n_; }
    const std::vector<std::vector<int>>& arrays() const { return arrays_; }

    // Signature of state i (0-based): (e_1^i, ..., e_n^i).
    std::vector<int> signature(int state) const;
    // Same, mapped to ancilla bits: +1 -> 0, -1 -> 1.
    std::vector<int> signature_bits(int state) const;
    // Inverse of signature_bits; -1 when no state carries these bits.
    int state_for_bits(const std::vector<int>& bits) const;

  private:
    friend EigenArraySet canonical_eigenarrays(int n);
    friend EigenArraySet validate_eigenarrays(const std::vector<std::vector<int>>& arrays);
    EigenArraySet(int n, std::vector<std::vector<int>> arrays)
        : n_(n), arrays_(std::move(arrays)) {}

    int n_;
    std::vector<std::vector<int>> arrays_;
};

// The binary-code arrays: e_j^i = +1 when bit j (MSB-first) of i-1 is 0.
// Satisfies every EigenArraySet invariant by construction.
EigenArraySet canonical_eigenarrays(int n);

// Validates candidate arrays against all conditions; throws UnbalancedArray,
// DuplicateOrComplement or NonInjectiveSignatures on the first violation.
EigenArraySet validate_eigenarrays(const std::vector<std::vector<int>>& arrays);

// The complete recipe for one discriminator: the state set, the eigenvalue
// arrays, and the synthesized operators U_j.
struct DiscriminatorSpec {
    OrthoSet ortho;
    EigenArraySet eigen;
    std::vector<CMat> operators;

    int n_qubits() const { return ortho.n_qubits(); }
};

DiscriminatorSpec make_discriminator(OrthoSet ortho, EigenArraySet eigen);

// U = V * diag(array) * V_dagger, so that U * phi_i = array[i] * phi_i for
// the columns phi_i of the set's v_matrix.
CMat synth_operator(const OrthoSet& ortho, const std::vector<int>& array);

// theta = 2 * atan2(beta, alpha); the rotation angle parameterizing the
// operators of the single-superposed-qubit families.
double theta_from(double alpha, double beta);

// Block matrix diag(I, u): the ancilla-controlled embedding with the ancilla
// as the most significant qubit of the enlarged space. Throws NotUnitary.
CMat controlled_embed(const CMat& u);

enum class Family { Bell, Ghz };

// Arrays paired with the decompositions below: U_j of the Bell (resp. 3-qubit
// GHZ) discriminator whose controlled form decompose_controlled(family, j)
// reproduces.
std::vector<std::vector<int>> bell_reference_arrays();
std::vector<std::vector<int>> ghz3_reference_arrays();

// Two-qubit-gate realizations of the controlled discrimination operators for
// the Bell set (j in {1,2}) and the 3-qubit GHZ set (j in {1,2,3}). The
// ancilla defaults to qubit n_work+1 (the single-ancilla register); pass
// `ancilla` to splice the sequence into a wider register. The composed matrix
// equals the ancilla-controlled embedding of U_j up to global phase.
GateSeq decompose_controlled(Family family, int j);
GateSeq decompose_controlled(Family family, int j, int ancilla);

}  // namespace qsd
