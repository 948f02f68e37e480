#include "qsd/linalg.hpp"

#include "qsd/errors.hpp"

namespace qsd {

CMat eye(Eigen::Index n) { return CMat::Identity(n, n); }

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CVec kron(const CVec& a, const CVec& b) {
    CVec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

double max_abs(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("max_abs_diff: shapes differ");
    return max_abs(a - b);
}

bool is_unitary(const CMat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m.adjoint() * m - eye(m.rows())) <= tol;
}

bool is_hermitian(const CMat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint().eval()) <= tol;
}

CMat expm_i(const CMat& h) {
    if (h.rows() != h.cols()) throw DimensionMismatch("expm_i: matrix not square");
    const double dev = max_abs(h - h.adjoint().eval());
    if (dev > tol::hermitian) throw NonHermitian(dev);
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    const Eigen::VectorXd lambda = es.eigenvalues();
    CVec phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k)
        phases(k) = std::exp(Complex(0.0, lambda(k)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

bool equal_up_to_global_phase(const CMat& a, const CMat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index ri = 0, ci = 0;
    const double bmax = b.size() == 0 ? 0.0 : b.cwiseAbs().maxCoeff(&ri, &ci);
    if (bmax < 1e-300) return max_abs(a) <= tol;
    Complex c = a(ri, ci) / b(ri, ci);
    const double mag = std::abs(c);
    if (mag < 1e-300) return false;
    c /= mag;
    return max_abs(a - c * b) <= tol;
}

const CMat& pauli_x() {
    static const CMat m = (CMat(2, 2) << 0, 1, 1, 0).finished();
    return m;
}

const CMat& pauli_y() {
    static const CMat m = (CMat(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    return m;
}

const CMat& pauli_z() {
    static const CMat m = (CMat(2, 2) << 1, 0, 0, -1).finished();
    return m;
}

const CMat& hadamard_gate() {
    static const CMat m = (CMat(2, 2) << 1, 1, 1, -1).finished() / std::sqrt(2.0);
    return m;
}

}  // namespace qsd
