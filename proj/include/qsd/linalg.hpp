#pragma once

#include <Eigen/Dense>
#include <complex>

// Dense complex linear algebra for registers up to ~2^10 dimensions.
//
// Global convention used everywhere in this toolkit: qubit 1 is the most
// significant bit of a basis index, and ancilla qubits are appended after
// the work qubits.

namespace qsd {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

namespace tol {
inline constexpr double unitary = 1e-10;
inline constexpr double hermitian = 1e-10;
inline constexpr double propagator = 1e-9;
inline constexpr double probability = 1e-9;
}  // namespace tol

CMat eye(Eigen::Index n);

// Kronecker product, row-major block convention:
// kron(a,b)[(i*b.rows+k),(j*b.cols+l)] = a(i,j)*b(k,l).
CMat kron(const CMat& a, const CMat& b);
CVec kron(const CVec& a, const CVec& b);

double max_abs(const CMat& m);
double max_abs_diff(const CMat& a, const CMat& b);

bool is_unitary(const CMat& m, double tol = tol::unitary);
bool is_hermitian(const CMat& m, double tol = tol::hermitian);

// exp(i*h) for Hermitian h, via eigendecomposition. Throws NonHermitian if
// max |h - h_dagger| exceeds 1e-10.
CMat expm_i(const CMat& h);

// True iff a == c*b for some unit-modulus c, within tol on the largest entry
// difference. c is fixed from the entry of b with the largest magnitude.
bool equal_up_to_global_phase(const CMat& a, const CMat& b, double tol = tol::propagator);

const CMat& pauli_x();
const CMat& pauli_y();
const CMat& pauli_z();
const CMat& hadamard_gate();

}  // namespace qsd
