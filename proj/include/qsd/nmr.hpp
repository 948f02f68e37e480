#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qsd/linalg.hpp"

namespace qsd {

// Weakly coupled spin system. Larmor frequencies and couplings are in Hz;
// gamma_rel holds gyromagnetic ratios relative to the first spin (for the
// equilibrium deviation state). Spin indices are 1-based, spin 1 being the
// MSB of the register index.
struct SpinSystem {
    int n_spins = 0;
    std::vector<double> larmor;
    std::map<std::pair<int, int>, double> j_coupling;  // keyed with i < j
    std::vector<double> gamma_rel;

    double coupling(int i, int j) const;
    void set_coupling(int i, int j, double hz);
};

// Pulse-sequence elements. A sequence is time-ordered: the first element is
// applied first, so the compiled propagator is prop(last) * ... * prop(first).
enum class Axis { X, Y, MinusX, MinusY };

struct RfPulse {
    int spin;
    double angle;  // flip angle, radians
    Axis axis;
};

// Evolution under the scalar coupling of spins (a, b), scaled so the
// propagator is exp(-i * angle * 2 * Iz^a * Iz^b).
struct CouplingDelay {
    int spin_a;
    int spin_b;
    double angle;
};

// z rotation exp(-i * angle * Iz^spin); compiled through the composite
// (pi/2)_{-x} (angle)_y (pi/2)_x pulse triplet.
struct ZRotation {
    int spin;
    double angle;
};

using PulseElem = std::variant<RfPulse, CouplingDelay, ZRotation>;
using PulseSeq = std::vector<PulseElem>;

// scalar * product of single-spin factors; spins not listed contribute the
// identity. Factor operators are I_alpha = Pauli_alpha / 2.
enum class SpinAxis { Identity, X, Y, Z };

struct ProductOp {
    double coeff = 1.0;
    std::vector<std::pair<int, SpinAxis>> factors;  // (spin, axis)
};

// H = sum_i nu_i Iz^i + sum_{i<j} J_ij Iz^i Iz^j, in Hz.
CMat spin_hamiltonian(const SpinSystem& sys);

CMat realize_product_op(const ProductOp& term, int n_spins);

// Effective Hamiltonians whose exponentials exp(i*H) realize the controlled
// discrimination operators on the 3-spin register (spin 1 = ancilla, spins
// 2 and 3 = work qubits).
enum class EffectiveH { H1, H2 };
std::vector<ProductOp> effective_hamiltonian_terms(EffectiveH which);
CMat effective_hamiltonian(EffectiveH which);

// Equilibrium deviation density operator sum_i (gamma_i/gamma_1) Iz^i.
CMat equilibrium_rho(const SpinSystem& sys);

// Time-ordered compilation of a pulse sequence into its propagator. Throws
// UnknownSpin for out-of-range spin indices. Result is unitary within 1e-10.
CMat compile_pulses(const PulseSeq& seq, const SpinSystem& sys);

// Composite expansion of ZRotation: realizes exp(-i*angle*Iz^spin) exactly.
PulseSeq zrotation_composite(int spin, double angle);

// Coupling evolution sandwiched between two (pi/2) y-axis pulses on spin j;
// realizes exp(-i*theta*2*Iz^i*Ix^j) exactly. Requires i != j.
PulseSeq two_spin_sandwich(int i, int j, double theta);

// Nested sandwich cascade realizing exp(-i*theta*4*Iz^i1*Iz^i2*Ix^j).
PulseSeq three_spin_cascade(int i1, int i2, int j, double theta);

// Single-gate pulse realizations, each equal to the gate up to global phase.
PulseSeq hadamard_sequence(int spin);
PulseSeq x_sequence(int spin);
PulseSeq cz_sequence(int a, int b);
PulseSeq cnot_sequence(int control, int target);

// Built-in sequences for the controlled operators of the uniform two-qubit
// family on the 3-spin register (j in {1, 2}); compiled, they equal
// exp(i*H_j) up to global phase.
PulseSeq controlled_u_sequence(int j);

// Pulse realizations of the three controlled GHZ discrimination operators on
// the 4-spin register (spin 1 = ancilla, spins 2..4 = work), derived from
// their two-qubit-gate decompositions (j in {1, 2, 3}).
PulseSeq ghz_controlled_sequence(int j);

enum class PeakSign { Positive, Negative, Indeterminate };

// Sign of the reduced <Iz> of one spin: the peak-sign readout. Positive means
// the spin is (up to the 1e-6 threshold) in |0>.
PeakSign ancilla_readout(const CMat& rho, int ancilla_spin);
std::string peak_sign_name(PeakSign s);

// Given a propagator equal to diag(I, u) up to global phase (control qubit =
// MSB), strips the phase and returns u. Throws DimensionMismatch when the
// matrix has no such block structure within tol.
CMat extract_controlled_block(const CMat& cu, double tol = tol::propagator);

}  // namespace qsd
