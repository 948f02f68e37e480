#include "qsd/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsd/errors.hpp"

namespace qsd {

namespace {

constexpr int kMaxQubits = 10;

// Bit of qubit q (1-based, MSB-first) inside an n-qubit basis index.
inline int qubit_bit(Eigen::Index index, int q, int n_qubits) {
    return static_cast<int>((index >> (n_qubits - q)) & 1);
}

void check_qubit(int q, int n_qubits) {
    if (q < 1 || q > n_qubits)
        throw DimensionMismatch("qubit index " + std::to_string(q) + " outside register of " +
                                std::to_string(n_qubits) + " qubits");
}

const CMat& cnot_matrix() {
    static const CMat m = controlled_embed(pauli_x());
    return m;
}

const CMat& cz_matrix() {
    static const CMat m = controlled_embed(pauli_z());
    return m;
}

}  // namespace

CMat embed_operator(int n_qubits, const std::vector<int>& qubits, const CMat& op) {
    const int k = static_cast<int>(qubits.size());
    if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << k))
        throw DimensionMismatch("operator dimension does not match qubit count");
    for (int q : qubits) check_qubit(q, n_qubits);
    for (size_t a = 0; a < qubits.size(); ++a)
        for (size_t b = a + 1; b < qubits.size(); ++b)
            if (qubits[a] == qubits[b])
                throw DimensionMismatch("repeated qubit index in operator embedding");

    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    CMat out = CMat::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        int r = 0;
        for (int a = 0; a < k; ++a) r = (r << 1) | qubit_bit(col, qubits[static_cast<size_t>(a)], n_qubits);
        for (int rp = 0; rp < (1 << k); ++rp) {
            const Complex amp = op(rp, r);
            if (amp == Complex(0.0, 0.0)) continue;
            Eigen::Index row = col;
            for (int a = 0; a < k; ++a) {
                const int q = qubits[static_cast<size_t>(a)];
                const Eigen::Index mask = Eigen::Index{1} << (n_qubits - q);
                if ((rp >> (k - 1 - a)) & 1)
                    row |= mask;
                else
                    row &= ~mask;
            }
            out(row, col) += amp;
        }
    }
    return out;
}

CMat gate_matrix(const Gate& g, int n_qubits) {
    switch (g.kind) {
        case GateKind::H: return embed_operator(n_qubits, {g.q0}, hadamard_gate());
        case GateKind::X: return embed_operator(n_qubits, {g.q0}, pauli_x());
        case GateKind::Cnot: return embed_operator(n_qubits, {g.q0, g.q1}, cnot_matrix());
        case GateKind::Cz: return embed_operator(n_qubits, {g.q0, g.q1}, cz_matrix());
        case GateKind::CuBlock: {
            std::vector<int> qubits = {g.q0};
            qubits.insert(qubits.end(), g.targets.begin(), g.targets.end());
            return embed_operator(n_qubits, qubits, controlled_embed(g.block));
        }
    }
    throw DimensionMismatch("unknown gate kind");
}

CMat circuit_unitary(const Circuit& c) {
    if (c.total_qubits() < 1 || c.total_qubits() > kMaxQubits)
        throw DimensionMismatch("circuit register must have 1.." + std::to_string(kMaxQubits) +
                                " qubits");
    CMat u = eye(Eigen::Index{1} << c.total_qubits());
    for (const Gate& g : c.gates) u = gate_matrix(g, c.total_qubits()) * u;
    return u;
}

DensityMatrix::DensityMatrix(CMat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("density matrix not square");
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > 1e-10)
        throw DimensionMismatch("density matrix trace differs from 1");
    if (!is_hermitian(m_, 1e-10)) throw NonHermitian(max_abs(m_ - m_.adjoint().eval()));
    Eigen::SelfAdjointEigenSolver<CMat> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw DimensionMismatch("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const CVec& psi) {
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-9) throw NotNormalized("pure-state vector is not normalized");
    return DensityMatrix(psi * psi.adjoint());
}

Circuit build_pea_circuit(const DiscriminatorSpec& spec) {
    const int n = spec.n_qubits();
    if (2 * n > kMaxQubits)
        throw DimensionMismatch("discriminator needs " + std::to_string(2 * n) +
                                " qubits, register is capped at " + std::to_string(kMaxQubits));
    Circuit c;
    c.n_work = n;
    c.n_ancilla = n;
    std::vector<int> work(static_cast<size_t>(n));
    for (int q = 1; q <= n; ++q) work[static_cast<size_t>(q - 1)] = q;
    for (int j = 1; j <= n; ++j) c.gates.push_back(Gate::h(n + j));
    for (int j = 1; j <= n; ++j)
        c.gates.push_back(Gate::cu(n + j, work, spec.operators[static_cast<size_t>(j - 1)]));
    for (int j = 1; j <= n; ++j) c.gates.push_back(Gate::h(n + j));
    return c;
}

std::vector<Circuit> split_single_ancilla(const Circuit& c) {
    const int n = c.n_ancilla;
    const size_t expected = static_cast<size_t>(3 * n);
    bool shaped = c.gates.size() == expected && c.n_work >= 1;
    for (int j = 0; shaped && j < n; ++j) {
        shaped = c.gates[static_cast<size_t>(j)].kind == GateKind::H &&
                 c.gates[static_cast<size_t>(n + j)].kind == GateKind::CuBlock &&
                 c.gates[static_cast<size_t>(2 * n + j)].kind == GateKind::H;
    }
    if (!shaped)
        throw DimensionMismatch("split_single_ancilla expects a circuit from build_pea_circuit");

    std::vector<Circuit> out;
    out.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Gate& block = c.gates[static_cast<size_t>(n + j)];
        Circuit s;
        s.n_work = c.n_work;
        s.n_ancilla = 1;
        const int anc = c.n_work + 1;
        s.gates.push_back(Gate::h(anc));
        s.gates.push_back(Gate::cu(anc, block.targets, block.block));
        s.gates.push_back(Gate::h(anc));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<MeasurementRecord> run_statevector(const Circuit& c, const CVec& input_work) {
    const Eigen::Index work_dim = Eigen::Index{1} << c.n_work;
    const Eigen::Index anc_dim = Eigen::Index{1} << c.n_ancilla;
    if (input_work.size() != work_dim)
        throw DimensionMismatch("input state has dimension " + std::to_string(input_work.size()) +
                                ", circuit work register has " + std::to_string(work_dim));
    if (std::abs(input_work.norm() - 1.0) > 1e-9)
        throw NotNormalized("input work state is not normalized");

    CVec full = CVec::Zero(work_dim * anc_dim);
    // Ancillas are the low bits: full index = work_index * anc_dim + 0.
    for (Eigen::Index w = 0; w < work_dim; ++w) full(w * anc_dim) = input_work(w);
    for (const Gate& g : c.gates) full = gate_matrix(g, c.total_qubits()) * full;

    std::vector<MeasurementRecord> records;
    for (Eigen::Index a = 0; a < anc_dim; ++a) {
        CVec branch(work_dim);
        for (Eigen::Index w = 0; w < work_dim; ++w) branch(w) = full(w * anc_dim + a);
        const double p = branch.squaredNorm();
        if (p < 1e-12) continue;
        MeasurementRecord rec;
        rec.ancilla_bits.resize(static_cast<size_t>(c.n_ancilla));
        for (int j = 1; j <= c.n_ancilla; ++j)
            rec.ancilla_bits[static_cast<size_t>(j - 1)] = qubit_bit(a, j, c.n_ancilla);
        rec.probability = p;
        rec.post_work_state = branch / std::sqrt(p);
        records.push_back(std::move(rec));
    }
    return records;
}

DensityMatrix run_density(const Circuit& c, const DensityMatrix& rho_work) {
    const Eigen::Index work_dim = Eigen::Index{1} << c.n_work;
    const Eigen::Index anc_dim = Eigen::Index{1} << c.n_ancilla;
    if (rho_work.dim() != work_dim)
        throw DimensionMismatch("density matrix dimension does not match the work register");
    CMat anc0 = CMat::Zero(anc_dim, anc_dim);
    anc0(0, 0) = 1.0;
    const CMat rho_full = kron(rho_work.matrix(), anc0);
    const CMat u = circuit_unitary(c);
    return DensityMatrix(u * rho_full * u.adjoint());
}

DiscriminationResult discriminate(const DiscriminatorSpec& spec, const CVec& input_work) {
    const Circuit c = build_pea_circuit(spec);
    const auto records = run_statevector(c, input_work);
    const auto best = std::max_element(
        records.begin(), records.end(),
        [](const MeasurementRecord& a, const MeasurementRecord& b) { return a.probability < b.probability; });
    if (best == records.end() || best->probability < 1.0 - tol::probability)
        throw NotAMember(best == records.end() ? 0.0 : best->probability);
    DiscriminationResult res;
    res.bits = best->ancilla_bits;
    res.index = spec.eigen.state_for_bits(res.bits);
    res.post_state = best->post_work_state;
    res.probability = best->probability;
    return res;
}

double state_fidelity(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("state_fidelity: dimensions differ");
    return std::norm(a.dot(b));
}

DeviationMetrics deviation_metrics(const CMat& reference, const CMat& other) {
    if (reference.rows() != other.rows() || reference.cols() != other.cols())
        throw DimensionMismatch("deviation_metrics: shapes differ");
    const double scale = max_abs(reference);
    const double denom = scale < 1e-300 ? 1.0 : scale;
    const CMat diff = (reference - other).cwiseAbs();
    DeviationMetrics m;
    m.max_percent = 100.0 * max_abs(diff) / denom;
    m.avg_percent = 100.0 * diff.cwiseAbs().sum() / (static_cast<double>(diff.size()) * denom);
    return m;
}

CMat partial_trace(const CMat& rho, int n_qubits, const std::vector<int>& keep) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (rho.rows() != dim || rho.cols() != dim)
        throw DimensionMismatch("partial_trace: matrix does not match qubit count");
    for (int q : keep) check_qubit(q, n_qubits);

    std::vector<int> traced;
    for (int q = 1; q <= n_qubits; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

    const int nk = static_cast<int>(keep.size());
    const int nt = static_cast<int>(traced.size());
    const Eigen::Index kd = Eigen::Index{1} << nk;
    const Eigen::Index td = Eigen::Index{1} << nt;

    auto compose = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
        Eigen::Index idx = 0;
        for (int a = 0; a < nk; ++a)
            if ((kept_bits >> (nk - 1 - a)) & 1)
                idx |= Eigen::Index{1} << (n_qubits - keep[static_cast<size_t>(a)]);
        for (int a = 0; a < nt; ++a)
            if ((traced_bits >> (nt - 1 - a)) & 1)
                idx |= Eigen::Index{1} << (n_qubits - traced[static_cast<size_t>(a)]);
        return idx;
    };

    CMat out = CMat::Zero(kd, kd);
    for (Eigen::Index i = 0; i < kd; ++i)
        for (Eigen::Index j = 0; j < kd; ++j)
            for (Eigen::Index e = 0; e < td; ++e) out(i, j) += rho(compose(i, e), compose(j, e));
    return out;
}

}  // namespace qsd
