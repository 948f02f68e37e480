#include "qsd/nmr.hpp"

#include <algorithm>
#include <cmath>

#include "qsd/errors.hpp"
#include "qsd/synth.hpp"

namespace qsd {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_spin(int spin, int n_spins) {
    if (spin < 1 || spin > n_spins) throw UnknownSpin(spin);
}

inline int spin_bit(Eigen::Index index, int spin, int n_spins) {
    return static_cast<int>((index >> (n_spins - spin)) & 1);
}

// Single-spin rotation exp(-i*angle*I_axis) as a 2x2 matrix.
CMat rf_rotation(double angle, Axis axis) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    CMat sigma;
    double sign = 1.0;
    switch (axis) {
        case Axis::X: sigma = pauli_x(); break;
        case Axis::Y: sigma = pauli_y(); break;
        case Axis::MinusX: sigma = pauli_x(); sign = -1.0; break;
        case Axis::MinusY: sigma = pauli_y(); sign = -1.0; break;
    }
    return c * eye(2) - Complex(0.0, sign * s) * sigma;
}

CMat embed_single_spin(const CMat& op, int spin, int n_spins) {
    CMat out = eye(Eigen::Index{1} << (spin - 1));
    out = kron(out, op);
    return kron(out, eye(Eigen::Index{1} << (n_spins - spin)));
}

}  // namespace

double SpinSystem::coupling(int i, int j) const {
    if (i == j) return 0.0;
    const auto key = std::minmax(i, j);
    const auto it = j_coupling.find({key.first, key.second});
    return it == j_coupling.end() ? 0.0 : it->second;
}

void SpinSystem::set_coupling(int i, int j, double hz) {
    if (i == j) throw UnknownSpin(i);
    check_spin(i, n_spins);
    check_spin(j, n_spins);
    const auto key = std::minmax(i, j);
    j_coupling[{key.first, key.second}] = hz;
}

CMat spin_hamiltonian(const SpinSystem& sys) {
    const int n = sys.n_spins;
    if (n < 1 || static_cast<int>(sys.larmor.size()) != n)
        throw DimensionMismatch("spin system has inconsistent larmor table");
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMat h = CMat::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        double e = 0.0;
        for (int i = 1; i <= n; ++i)
            e += sys.larmor[static_cast<size_t>(i - 1)] * (spin_bit(k, i, n) ? -0.5 : 0.5);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const double zz =
                    (spin_bit(k, i, n) ? -0.5 : 0.5) * (spin_bit(k, j, n) ? -0.5 : 0.5);
                e += sys.coupling(i, j) * zz;
            }
        h(k, k) = e;
    }
    return h;
}

CMat realize_product_op(const ProductOp& term, int n_spins) {
    if (n_spins < 1) throw DimensionMismatch("realize_product_op needs n_spins >= 1");
    std::vector<SpinAxis> axes(static_cast<size_t>(n_spins), SpinAxis::Identity);
    for (const auto& [spin, axis] : term.factors) {
        check_spin(spin, n_spins);
        if (axes[static_cast<size_t>(spin - 1)] != SpinAxis::Identity && axis != SpinAxis::Identity)
            throw DimensionMismatch("repeated spin in product operator");
        axes[static_cast<size_t>(spin - 1)] = axis;
    }
    CMat out = CMat::Identity(1, 1);
    for (int s = 1; s <= n_spins; ++s) {
        CMat factor;
        switch (axes[static_cast<size_t>(s - 1)]) {
            case SpinAxis::Identity: factor = eye(2); break;
            case SpinAxis::X: factor = 0.5 * pauli_x(); break;
            case SpinAxis::Y: factor = 0.5 * pauli_y(); break;
            case SpinAxis::Z: factor = 0.5 * pauli_z(); break;
        }
        out = kron(out, factor);
    }
    return term.coeff * out;
}

std::vector<ProductOp> effective_hamiltonian_terms(EffectiveH which) {
    using F = std::pair<int, SpinAxis>;
    if (which == EffectiveH::H1)
        return {
            ProductOp{kPi / 4.0, {}},
            ProductOp{-kPi / 2.0, {F{1, SpinAxis::Z}}},
            ProductOp{-kPi / 2.0, {F{3, SpinAxis::X}}},
            ProductOp{kPi, {F{1, SpinAxis::Z}, F{3, SpinAxis::X}}},
        };
    return {
        ProductOp{kPi / 4.0, {}},
        ProductOp{-kPi / 2.0, {F{1, SpinAxis::Z}}},
        ProductOp{-kPi, {F{2, SpinAxis::Z}, F{3, SpinAxis::X}}},
        ProductOp{2.0 * kPi, {F{1, SpinAxis::Z}, F{2, SpinAxis::Z}, F{3, SpinAxis::X}}},
    };
}

CMat effective_hamiltonian(EffectiveH which) {
    CMat h = CMat::Zero(8, 8);
    for (const ProductOp& term : effective_hamiltonian_terms(which))
        h += realize_product_op(term, 3);
    return h;
}

CMat equilibrium_rho(const SpinSystem& sys) {
    if (sys.gamma_rel.size() != static_cast<size_t>(sys.n_spins) || sys.gamma_rel.empty())
        throw DimensionMismatch("gamma_rel is not populated for every spin");
    const double lead = sys.gamma_rel.front();
    CMat rho = CMat::Zero(Eigen::Index{1} << sys.n_spins, Eigen::Index{1} << sys.n_spins);
    for (int s = 1; s <= sys.n_spins; ++s) {
        ProductOp op{sys.gamma_rel[static_cast<size_t>(s - 1)] / lead, {{s, SpinAxis::Z}}};
        rho += realize_product_op(op, sys.n_spins);
    }
    return rho;
}

CMat compile_pulses(const PulseSeq& seq, const SpinSystem& sys) {
    const int n = sys.n_spins;
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMat u = eye(dim);
    for (const PulseElem& elem : seq) {
        if (const auto* rf = std::get_if<RfPulse>(&elem)) {
            check_spin(rf->spin, n);
            u = embed_single_spin(rf_rotation(rf->angle, rf->axis), rf->spin, n) * u;
        } else if (const auto* d = std::get_if<CouplingDelay>(&elem)) {
            check_spin(d->spin_a, n);
            check_spin(d->spin_b, n);
            if (d->spin_a == d->spin_b) throw UnknownSpin(d->spin_a);
            CMat evo = CMat::Zero(dim, dim);
            for (Eigen::Index k = 0; k < dim; ++k) {
                const double half = spin_bit(k, d->spin_a, n) == spin_bit(k, d->spin_b, n) ? 0.5 : -0.5;
                evo(k, k) = std::exp(Complex(0.0, -d->angle * half));
            }
            u = evo * u;
        } else {
            const auto& z = std::get<ZRotation>(elem);
            check_spin(z.spin, n);
            u = compile_pulses(zrotation_composite(z.spin, z.angle), sys) * u;
        }
    }
    return u;
}

PulseSeq zrotation_composite(int spin, double angle) {
    return {RfPulse{spin, kPi / 2.0, Axis::MinusX}, RfPulse{spin, angle, Axis::Y},
            RfPulse{spin, kPi / 2.0, Axis::X}};
}

PulseSeq two_spin_sandwich(int i, int j, double theta) {
    if (i == j) throw UnknownSpin(i);
    return {RfPulse{j, kPi / 2.0, Axis::MinusY}, CouplingDelay{i, j, theta},
            RfPulse{j, kPi / 2.0, Axis::Y}};
}

PulseSeq three_spin_cascade(int i1, int i2, int j, double theta) {
    if (i1 == i2 || i1 == j || i2 == j) throw UnknownSpin(j);
    // Conjugates the (i2, j) coupling evolution by exp(-i*(pi/2)*2*Iz^i1*Iy^j),
    // itself an x-pulse sandwich, turning Iz^j into 2*Iz^i1*Ix^j.
    return {
        RfPulse{j, kPi / 2.0, Axis::X},      CouplingDelay{i1, j, -kPi / 2.0},
        RfPulse{j, kPi / 2.0, Axis::MinusX}, CouplingDelay{i2, j, theta},
        RfPulse{j, kPi / 2.0, Axis::X},      CouplingDelay{i1, j, kPi / 2.0},
        RfPulse{j, kPi / 2.0, Axis::MinusX},
    };
}

PulseSeq hadamard_sequence(int spin) {
    return {RfPulse{spin, kPi, Axis::X}, RfPulse{spin, kPi / 2.0, Axis::MinusY}};
}

PulseSeq x_sequence(int spin) { return {RfPulse{spin, kPi, Axis::X}}; }

PulseSeq cz_sequence(int a, int b) {
    if (a == b) throw UnknownSpin(a);
    return {ZRotation{a, kPi / 2.0}, ZRotation{b, kPi / 2.0}, CouplingDelay{a, b, -kPi / 2.0}};
}

PulseSeq cnot_sequence(int control, int target) {
    PulseSeq seq = hadamard_sequence(target);
    const PulseSeq mid = cz_sequence(control, target);
    seq.insert(seq.end(), mid.begin(), mid.end());
    const PulseSeq h2 = hadamard_sequence(target);
    seq.insert(seq.end(), h2.begin(), h2.end());
    return seq;
}

PulseSeq controlled_u_sequence(int j) {
    // Spin 1 is the ancilla, spins 2 and 3 the work qubits. The fragments
    // realize the commuting factors of the effective Hamiltonians, so their
    // order is immaterial.
    if (j == 1) {
        PulseSeq seq = zrotation_composite(1, kPi / 2.0);
        seq.push_back(RfPulse{3, kPi / 2.0, Axis::X});
        const PulseSeq zx = two_spin_sandwich(1, 3, -kPi / 2.0);
        seq.insert(seq.end(), zx.begin(), zx.end());
        return seq;
    }
    if (j == 2) {
        PulseSeq seq = zrotation_composite(1, kPi / 2.0);
        const PulseSeq zx = two_spin_sandwich(2, 3, kPi / 2.0);
        seq.insert(seq.end(), zx.begin(), zx.end());
        const PulseSeq zzx = three_spin_cascade(1, 2, 3, -kPi / 2.0);
        seq.insert(seq.end(), zzx.begin(), zzx.end());
        return seq;
    }
    throw UnsupportedFamily("controlled_u_sequence index must be 1 or 2, got " + std::to_string(j));
}

PulseSeq ghz_controlled_sequence(int j) {
    if (j < 1 || j > 3)
        throw UnsupportedFamily("ghz_controlled_sequence index must be 1..3, got " +
                                std::to_string(j));
    // Gate qubits: work 1..3, ancilla 4. Spin register: ancilla is spin 1,
    // work qubit k is spin k+1.
    const auto remap = [](int q) { return q == 4 ? 1 : q + 1; };
    PulseSeq seq;
    for (const Gate& g : decompose_controlled(Family::Ghz, j)) {
        PulseSeq frag;
        switch (g.kind) {
            case GateKind::Cnot: frag = cnot_sequence(remap(g.q0), remap(g.q1)); break;
            case GateKind::Cz: frag = cz_sequence(remap(g.q0), remap(g.q1)); break;
            default: throw UnsupportedFamily("unexpected gate in ghz decomposition");
        }
        seq.insert(seq.end(), frag.begin(), frag.end());
    }
    return seq;
}

PeakSign ancilla_readout(const CMat& rho, int ancilla_spin) {
    if (rho.rows() != rho.cols() || rho.rows() < 2)
        throw DimensionMismatch("ancilla_readout expects a square density operator");
    int n = 0;
    while ((Eigen::Index{1} << n) < rho.rows()) ++n;
    if ((Eigen::Index{1} << n) != rho.rows())
        throw DimensionMismatch("density operator dimension is not a power of two");
    check_spin(ancilla_spin, n);
    const CMat iz = realize_product_op(ProductOp{1.0, {{ancilla_spin, SpinAxis::Z}}}, n);
    const double expectation = (rho * iz).trace().real();
    if (expectation > 1e-6) return PeakSign::Positive;
    if (expectation < -1e-6) return PeakSign::Negative;
    return PeakSign::Indeterminate;
}

std::string peak_sign_name(PeakSign s) {
    switch (s) {
        case PeakSign::Positive: return "positive";
        case PeakSign::Negative: return "negative";
        case PeakSign::Indeterminate: return "indeterminate";
    }
    return "?";
}

CMat extract_controlled_block(const CMat& cu, double tol) {
    if (cu.rows() != cu.cols() || cu.rows() % 2 != 0)
        throw DimensionMismatch("controlled propagator must have even square dimension");
    const Eigen::Index d = cu.rows() / 2;
    const CMat tl = cu.topLeftCorner(d, d);
    Eigen::Index ri = 0, ci = 0;
    const double tlmax = tl.cwiseAbs().maxCoeff(&ri, &ci);
    if (ri != ci || std::abs(tlmax - std::abs(tl(ri, ri))) > tol)
        throw DimensionMismatch("propagator has no identity block");
    const Complex phase = tl(ri, ri) / std::abs(tl(ri, ri));
    const CMat scaled = cu / phase;
    if (max_abs(scaled.topLeftCorner(d, d) - eye(d)) > tol ||
        max_abs(scaled.topRightCorner(d, d)) > tol || max_abs(scaled.bottomLeftCorner(d, d)) > tol)
        throw DimensionMismatch("propagator is not an ancilla-controlled block matrix");
    return scaled.bottomRightCorner(d, d);
}

}  // namespace qsd
