#include "qsd/synth.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "qsd/errors.hpp"

namespace qsd {

Gate Gate::h(int q) {
    Gate g;
    g.kind = GateKind::H;
    g.q0 = q;
    return g;
}

Gate Gate::x(int q) {
    Gate g;
    g.kind = GateKind::X;
    g.q0 = q;
    return g;
}

Gate Gate::cnot(int control, int target) {
    Gate g;
    g.kind = GateKind::Cnot;
    g.q0 = control;
    g.q1 = target;
    return g;
}

Gate Gate::cz(int a, int b) {
    Gate g;
    g.kind = GateKind::Cz;
    g.q0 = a;
    g.q1 = b;
    return g;
}

Gate Gate::cu(int control, std::vector<int> targets, CMat u) {
    if (!is_unitary(u)) throw NotUnitary(max_abs(u.adjoint() * u - eye(u.rows())));
    if (u.rows() != (Eigen::Index{1} << targets.size()))
        throw DimensionMismatch("controlled block dimension does not match target count");
    Gate g;
    g.kind = GateKind::CuBlock;
    g.q0 = control;
    g.targets = std::move(targets);
    g.block = std::move(u);
    return g;
}

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Cnot: return "cnot";
        case GateKind::Cz: return "cz";
        case GateKind::CuBlock: return "cu";
    }
    return "?";
}

std::vector<int> EigenArraySet::signature(int state) const {
    std::vector<int> sig(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) sig[static_cast<size_t>(j)] = arrays_[static_cast<size_t>(j)][static_cast<size_t>(state)];
    return sig;
}

std::vector<int> EigenArraySet::signature_bits(int state) const {
    std::vector<int> bits = signature(state);
    for (int& b : bits) b = (b == 1) ? 0 : 1;
    return bits;
}

int EigenArraySet::state_for_bits(const std::vector<int>& bits) const {
    const int count = 1 << n_;
    for (int i = 0; i < count; ++i)
        if (signature_bits(i) == bits) return i;
    return -1;
}

EigenArraySet canonical_eigenarrays(int n) {
    if (n < 1) throw BadCardinality("canonical_eigenarrays requires n >= 1");
    const int count = 1 << n;
    std::vector<std::vector<int>> arrays(static_cast<size_t>(n),
                                         std::vector<int>(static_cast<size_t>(count)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < count; ++i)
            arrays[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                ((i >> (n - 1 - j)) & 1) ? -1 : 1;
    return EigenArraySet(n, std::move(arrays));
}

EigenArraySet validate_eigenarrays(const std::vector<std::vector<int>>& arrays) {
    const int n = static_cast<int>(arrays.size());
    if (n < 1) throw BadCardinality("need at least one eigenvalue array");
    const size_t count = size_t{1} << n;
    for (int j = 0; j < n; ++j) {
        const auto& a = arrays[static_cast<size_t>(j)];
        if (a.size() != count)
            throw BadCardinality("eigenvalue array " + std::to_string(j + 1) + " has length " +
                                 std::to_string(a.size()) + ", expected " + std::to_string(count));
        int sum = 0;
        for (int e : a) {
            if (e != 1 && e != -1)
                throw ParseError("eigenvalue arrays may contain only +1 and -1");
            sum += e;
        }
        if (sum != 0) throw UnbalancedArray(j + 1);
    }
    for (int j = 1; j < n; ++j) {
        for (int m = 0; m < j; ++m) {
            bool equal = true, complement = true;
            for (size_t i = 0; i < count; ++i) {
                const int a = arrays[static_cast<size_t>(j)][i];
                const int b = arrays[static_cast<size_t>(m)][i];
                equal = equal && (a == b);
                complement = complement && (a == -b);
            }
            if (equal || complement) throw DuplicateOrComplement(j + 1, m + 1);
        }
    }
    // Stronger than the pairwise conditions: the joint signature map must be
    // injective, otherwise two states would share an ancilla readout.
    EigenArraySet set(n, arrays);
    std::map<std::vector<int>, int> seen;
    for (int i = 0; i < static_cast<int>(count); ++i) {
        auto [it, inserted] = seen.emplace(set.signature(i), i);
        if (!inserted) throw NonInjectiveSignatures(it->second, i);
    }
    return set;
}

CMat synth_operator(const OrthoSet& ortho, const std::vector<int>& array) {
    const size_t dim = static_cast<size_t>(ortho.v_matrix().rows());
    if (array.size() != dim)
        throw DimensionMismatch("eigenvalue array length " + std::to_string(array.size()) +
                                " does not match state dimension " + std::to_string(dim));
    CVec diag(static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; ++i) diag(static_cast<Eigen::Index>(i)) = static_cast<double>(array[i]);
    const CMat& v = ortho.v_matrix();
    return v * diag.asDiagonal() * v.adjoint();
}

double theta_from(double alpha, double beta) {
    if (std::hypot(alpha, beta) < 1e-15)
        throw NotNormalized("theta_from requires (alpha, beta) != (0, 0)");
    return 2.0 * std::atan2(beta, alpha);
}

CMat controlled_embed(const CMat& u) {
    if (!is_unitary(u)) throw NotUnitary(max_abs(u.adjoint() * u - eye(u.rows())));
    const Eigen::Index d = u.rows();
    CMat out = CMat::Zero(2 * d, 2 * d);
    out.topLeftCorner(d, d) = eye(d);
    out.bottomRightCorner(d, d) = u;
    return out;
}

DiscriminatorSpec make_discriminator(OrthoSet ortho, EigenArraySet eigen) {
    if (eigen.n() != ortho.n_qubits())
        throw DimensionMismatch("eigenvalue arrays are for " + std::to_string(eigen.n()) +
                                " qubits, state set has " + std::to_string(ortho.n_qubits()));
    std::vector<CMat> ops;
    ops.reserve(static_cast<size_t>(eigen.n()));
    for (const auto& array : eigen.arrays()) {
        CMat u = synth_operator(ortho, array);
        if (!is_unitary(u)) throw NotUnitary(max_abs(u.adjoint() * u - eye(u.rows())));
        ops.push_back(std::move(u));
    }
    // The defining eigen-equation; holds by construction but is the module's
    // master invariant, so verify it on every build.
    for (size_t j = 0; j < ops.size(); ++j) {
        for (int i = 0; i < ortho.size(); ++i) {
            const double e = static_cast<double>(eigen.arrays()[j][static_cast<size_t>(i)]);
            const double dev = (ops[j] * ortho.state(i) - e * ortho.state(i)).cwiseAbs().maxCoeff();
            if (dev > tol::propagator)
                throw DimensionMismatch("synthesized operator violates its eigen-equation");
        }
    }
    return DiscriminatorSpec{std::move(ortho), std::move(eigen), std::move(ops)};
}

std::vector<std::vector<int>> bell_reference_arrays() {
    return {{1, -1, 1, -1}, {-1, 1, 1, -1}};
}

std::vector<std::vector<int>> ghz3_reference_arrays() {
    return {{1, -1, 1, -1, 1, -1, 1, -1},
            {-1, 1, 1, -1, 1, -1, -1, 1},
            {-1, 1, 1, -1, -1, 1, 1, -1}};
}

GateSeq decompose_controlled(Family family, int j) {
    const int n_work = (family == Family::Bell) ? 2 : 3;
    return decompose_controlled(family, j, n_work + 1);
}

GateSeq decompose_controlled(Family family, int j, int ancilla) {
    switch (family) {
        case Family::Bell: {
            if (j == 1) return {Gate::cnot(ancilla, 1), Gate::cnot(ancilla, 2)};
            if (j == 2)
                return {Gate::cz(2, 1), Gate::cnot(ancilla, 1), Gate::cnot(ancilla, 2),
                        Gate::cz(2, 1)};
            throw UnsupportedFamily("bell decomposition index must be 1 or 2, got " +
                                    std::to_string(j));
        }
        case Family::Ghz: {
            const GateSeq fanout = {Gate::cnot(ancilla, 1), Gate::cnot(ancilla, 2),
                                    Gate::cnot(ancilla, 3)};
            if (j == 1) return fanout;
            if (j == 2 || j == 3) {
                const Gate wrap = (j == 2) ? Gate::cz(2, 3) : Gate::cz(1, 3);
                GateSeq seq = {wrap};
                seq.insert(seq.end(), fanout.begin(), fanout.end());
                seq.push_back(wrap);
                return seq;
            }
            throw UnsupportedFamily("ghz decomposition index must be 1, 2 or 3, got " +
                                    std::to_string(j));
        }
    }
    throw UnsupportedFamily("unknown family");
}

}  // namespace qsd
