#pragma once

#include <vector>

#include "qsd/gates.hpp"
#include "qsd/linalg.hpp"
#include "qsd/synth.hpp"

namespace qsd {

// A gate list over [work qubits..., ancilla qubits...]; at most 10 qubits
// total. Qubit 1 is the MSB of the register index.
struct Circuit {
    int n_work = 0;
    int n_ancilla = 0;
    GateSeq gates;

    int total_qubits() const { return n_work + n_ancilla; }
};

// One ancilla measurement branch: the outcome bits (ancilla 1 first), its
// probability, and the normalized post-measurement work state.
struct MeasurementRecord {
    std::vector<int> ancilla_bits;
    double probability = 0.0;
    CVec post_work_state;
};

// Validated density matrix: trace 1 and Hermitian within 1e-10, eigenvalues
// above -1e-10.
class DensityMatrix {
  public:
    explicit DensityMatrix(CMat m);
    static DensityMatrix pure(const CVec& psi);
    const CMat& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

  private:
    CMat m_;
};

// Embed a k-qubit operator onto the given register qubits (1-based; the first
// listed qubit is the operator's own MSB). Used by gate_matrix and available
// for direct operator-identity checks.
CMat embed_operator(int n_qubits, const std::vector<int>& qubits, const CMat& op);

CMat gate_matrix(const Gate& g, int n_qubits);

// Product of all gate matrices, last gate leftmost.
CMat circuit_unitary(const Circuit& c);

// The phase-estimation discrimination circuit: a Hadamard on every ancilla,
// one block per operator controlled by its ancilla over all work qubits, and
// a closing Hadamard on every ancilla. Ancillas start in |0...0>.
Circuit build_pea_circuit(const DiscriminatorSpec& spec);

// Splits a build_pea_circuit output into n single-ancilla circuits, one per
// controlled block. Concatenating their ancilla bits reproduces the joint
// outcome for eigenstate inputs.
std::vector<Circuit> split_single_ancilla(const Circuit& c);

// Evolves input_work (x) |0...0> through the circuit and enumerates every
// ancilla outcome with nonzero probability, in ascending bit order.
std::vector<MeasurementRecord> run_statevector(const Circuit& c, const CVec& input_work);

// U_circ (rho (x) |0..0><0..0|) U_circ_dagger over the full register.
DensityMatrix run_density(const Circuit& c, const DensityMatrix& rho_work);

struct DiscriminationResult {
    int index = -1;           // 0-based position in the spec's state list
    std::vector<int> bits;
    CVec post_state;
    double probability = 0.0;
};

// Deterministic discrimination of a member state: runs the circuit, requires
// a branch of probability >= 1 - 1e-9 (else NotAMember), and inverts the
// signature map to recover the state index.
DiscriminationResult discriminate(const DiscriminatorSpec& spec, const CVec& input_work);

// |<a|b>|^2 for normalized vectors of equal dimension.
double state_fidelity(const CVec& a, const CVec& b);

struct DeviationMetrics {
    double avg_percent = 0.0;
    double max_percent = 0.0;
};

// Average and maximum entrywise |reference - other|, as percentages of the
// largest entry magnitude of the reference matrix.
DeviationMetrics deviation_metrics(const CMat& reference, const CMat& other);

// Partial trace keeping the listed qubits (1-based, original order kept).
CMat partial_trace(const CMat& rho, int n_qubits, const std::vector<int>& keep);

}  // namespace qsd
