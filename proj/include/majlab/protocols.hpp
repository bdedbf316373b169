// Copyright 2026 The majlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Magic-state protocols: four-Majorana measurement by teleportation through
// |a8>, the four-Majorana rotation exp(i pi/4 Q), the controlled-phase gate,
// and the pi/8 gate through |a4>.
//
// Outcome-conditioned corrections were found by exhaustive search over
// single- and two-mode Majorana Cliffords against the dense oracle, and are
// frozen here. All protocols are written in terms of mode ROLES; the tables
// only depend on anticommutation, so any labelling of the roles works.
//
// Teleported measurement (roles x1..x4 measured, a8 on A1..A4, B1..B4):
//   circuit   exchanges (A2,A3) (x4,A3) (x3,A1) (x2,x3), in that order, each
//             exp(-pi/4 g_p g_q); afterwards the pairs measured below are
//             -i g_{x_k} g_{A_k} of the original frame
//   measure   T1 = F(x1,x2), T2 = F(x3,x4), T3 = F(A1,A2), T4 = F(A3,A4)
//   correct   g_{x2} g_{B1} if T1 = +1     g_{x4} g_{B2} if T2 = +1
//             g_{A2} g_{B3} if T3 = -1     g_{A4} g_{B4} if T4 = -1
//   result    projection onto Q = s with s = -T1*T2*T3*T4, state on B1..B4
//
// Rotation exp(i pi/4 g_i g_j g_k g_l) with ancilla pair (a,b), -i g_a g_b = 1:
//   measure   s1 = g_i g_j g_l g_a, then s2 = -i g_k g_a
//   correct   exp(s2 * pi/4 * g_k g_b); then g_i g_j g_k g_l if s1*s2 = -1

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majlab/encoding.hpp"
#include "majlab/error.hpp"
#include "majlab/fock.hpp"
#include "majlab/majorana_algebra.hpp"

namespace majlab {

// Distillation thresholds for the ancilla infidelities. Documented only;
// nothing here distills.
inline constexpr double kA4DistillationThreshold = 0.14;
inline constexpr double kA8DistillationThreshold = 0.38;

enum class AncillaKind { a4, a8 };
enum class NoiseModel { none, dephase_to_orthogonal, depolarize };

struct AncillaSpec {
    AncillaKind kind = AncillaKind::a4;
    double epsilon = 0.0;
    NoiseModel noise = NoiseModel::dephase_to_orthogonal;
};

/// Mixed state as an ensemble of pure encoded registers.
struct NoisyState {
    std::vector<std::pair<double, EncodedRegister>> members;

    bool is_pure() const { return members.size() == 1; }

    const EncodedRegister &sample(RandomSource &rng) const {
        std::vector<double> w;
        for (const auto &m : members) {
            w.push_back(m.first);
        }
        return members[rng.categorical(w)].second;
    }

    /// <target| rho |target> for a logical target vector.
    double fidelity(const Eigen::VectorXcd &target) const {
        double f = 0.0;
        for (const auto &[w, reg] : members) {
            f += w * std::norm(target.normalized().dot(decode(reg)));
        }
        return f;
    }
};

inline Eigen::VectorXcd a4_vector() {
    Eigen::VectorXcd v(2);
    v << 1.0, std::polar(1.0, M_PI / 4);
    return v / std::sqrt(2.0);
}

inline Eigen::VectorXcd a8_vector() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v[0] = v[3] = 1.0 / std::sqrt(2.0);
    return v;
}

namespace detail {

/// Orthonormal basis whose first element is the ideal ancilla.
inline std::vector<Eigen::VectorXcd> ancilla_basis(AncillaKind kind) {
    if (kind == AncillaKind::a4) {
        Eigen::VectorXcd perp(2);
        perp << 1.0, -std::polar(1.0, M_PI / 4);
        return {a4_vector(), perp / std::sqrt(2.0)};
    }
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd phi_m = Eigen::VectorXcd::Zero(4), psi_p = Eigen::VectorXcd::Zero(4),
                     psi_m = Eigen::VectorXcd::Zero(4);
    phi_m[0] = r;
    phi_m[3] = -r;
    psi_p[1] = psi_p[2] = r;
    psi_m[1] = r;
    psi_m[2] = -r;
    return {a8_vector(), phi_m, psi_p, psi_m};
}

}  // namespace detail

/// Pure or noisy ancilla with <a|rho|a> = 1 - epsilon.
///   dephase_to_orthogonal: (1-e)|a><a| + e|a_perp><a_perp|
///   depolarize:            (1-p)|a><a| + p I/d with p = e d/(d-1), so
///                          epsilon may not exceed (d-1)/d
inline NoisyState prepare_ancilla(const AncillaSpec &spec) {
    const double eps = spec.epsilon;
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw InvalidArgument("ancilla infidelity must lie in [0, 1)");
    }
    const int nq = spec.kind == AncillaKind::a4 ? 1 : 2;
    auto basis = detail::ancilla_basis(spec.kind);
    NoisyState out;
    if (eps == 0.0) {
        out.members.emplace_back(1.0, encode_state(nq, basis[0]));
        return out;
    }
    switch (spec.noise) {
        case NoiseModel::none:
            throw InvalidArgument("noise model 'none' requires epsilon = 0");
        case NoiseModel::dephase_to_orthogonal:
            out.members.emplace_back(1.0 - eps, encode_state(nq, basis[0]));
            out.members.emplace_back(eps, encode_state(nq, basis[1]));
            break;
        case NoiseModel::depolarize: {
            const double d = static_cast<double>(basis.size());
            if (eps > (d - 1.0) / d + 1e-15) {
                throw InvalidArgument("depolarizing model cannot reach epsilon > (d-1)/d");
            }
            const double rest = eps / (d - 1.0);
            out.members.emplace_back(1.0 - eps, encode_state(nq, basis[0]));
            for (std::size_t k = 1; k < basis.size(); ++k) {
                out.members.emplace_back(rest, encode_state(nq, basis[k]));
            }
            break;
        }
    }
    return out;
}

inline NoisyState prepare_a4(const AncillaSpec &spec) {
    detail::require(spec.kind == AncillaKind::a4, "prepare_a4 needs kind a4");
    return prepare_ancilla(spec);
}

inline NoisyState prepare_a8(const AncillaSpec &spec) {
    detail::require(spec.kind == AncillaKind::a8, "prepare_a8 needs kind a8");
    return prepare_ancilla(spec);
}

struct ProtocolTrace {
    std::vector<std::pair<std::string, int>> outcomes;
    std::vector<double> probabilities;  // Born weight of each recorded outcome
    std::vector<std::string> corrections;
    bool success = false;

    double branch_probability() const {
        double p = 1.0;
        for (double q : probabilities) {
            p *= q;
        }
        return p;
    }

    void record(std::string label, const MeasurementRecord &rec) {
        outcomes.emplace_back(std::move(label), rec.outcome);
        probabilities.push_back(rec.pre_probability);
    }

    void append(const ProtocolTrace &inner) {
        outcomes.insert(outcomes.end(), inner.outcomes.begin(), inner.outcomes.end());
        probabilities.insert(probabilities.end(), inner.probabilities.begin(), inner.probabilities.end());
        corrections.insert(corrections.end(), inner.corrections.begin(), inner.corrections.end());
    }
};

enum class QuadMethod { projective, a8_teleport };

/// How four-Majorana observables are measured. With a8_teleport each
/// measurement consumes a fresh copy of `a8` (4 fermion modes).
struct QuadMeasurer {
    QuadMethod method = QuadMethod::a8_teleport;
    FockState a8 = encode_state(2, a8_vector()).state;

    static QuadMeasurer projective() { return {QuadMethod::projective, encode_state(2, a8_vector()).state}; }
    static QuadMeasurer teleport(const EncodedRegister &a8_member) {
        detail::require(a8_member.n_qubits == 2, "a8 resource must be two encoded qubits");
        return {QuadMethod::a8_teleport, a8_member.state};
    }
};

namespace detail {

inline MajoranaMonomial role_product(int phase, std::initializer_list<int> roles) {
    return MajoranaMonomial::product(phase, std::vector<int>(roles));
}

inline std::string pair_label(const char *op, int u, int v) {
    return std::string(op) + "(g" + std::to_string(u) + " g" + std::to_string(v) + ")";
}

struct TeleportOutcome {
    int sign = 1;
    FockState state;
};

/// Teleported measurement on a state that already contains the a8 block on
/// modes A (4) and B (4). Leaves the measured content on B.
inline TeleportOutcome teleport_measure(const FockState &with_a8, const std::array<int, 4> &x,
                                        const std::array<int, 4> &a, const std::array<int, 4> &b,
                                        OutcomeSource &source, ProtocolTrace &trace) {
    const std::array<int, 8> pos = {x[0], x[1], x[2], x[3], a[0], a[1], a[2], a[3]};
    FockState s = with_a8;
    static constexpr std::array<std::pair<int, int>, 4> kCircuit = {{{6, 7}, {4, 7}, {3, 5}, {2, 3}}};
    for (auto [p, q] : kCircuit) {
        s = apply_pair_rotation(s, pos[p - 1], pos[q - 1], -M_PI / 4);
    }
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
        auto [rec, post] = measure(s, role_product(3, {pos[2 * k], pos[2 * k + 1]}), source);
        trace.record("T" + std::to_string(k + 1), rec);
        t[k] = rec.outcome;
        s = std::move(post);
    }
    const std::array<bool, 4> apply = {t[0] > 0, t[1] > 0, t[2] < 0, t[3] < 0};
    for (int k = 0; k < 4; ++k) {
        if (apply[k]) {
            s = apply_monomial(s, role_product(0, {pos[2 * k + 1], b[k]}));
            trace.corrections.push_back(pair_label("", pos[2 * k + 1], b[k]));
        }
    }
    return {-t[0] * t[1] * t[2] * t[3], std::move(s)};
}

}  // namespace detail

struct QuadMeasurementResult {
    int sign = 1;
    FockState output;  // teleported register, 2 fermion modes
    ProtocolTrace trace;
};

/// Quad measurement of g1 g2 g3 g4 on a 4-Majorana system via an a8
/// ancilla on modes 5-12. The projected input is returned as it appears on
/// modes 9-12 (relabelled to 1-4).
inline QuadMeasurementResult quad_measurement_via_a8(const FockState &system, const FockState &ancilla,
                                                     OutcomeSource &source) {
    detail::require(system.n_modes() == 2, "system must be 4 Majorana modes");
    detail::require(ancilla.n_modes() == 4, "a8 ancilla must be 8 Majorana modes");
    QuadMeasurementResult out;
    auto tel = detail::teleport_measure(tensor(system, ancilla), {1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12},
                                        source, out.trace);
    BlockSplit sp = split_high(tel.state, 4);
    if (sp.residual > 1e-8) {
        throw NumericalFailure("teleported output is entangled with the measured modes");
    }
    out.sign = tel.sign;
    out.output = sp.high;
    out.trace.outcomes.emplace_back("Q", tel.sign);
    out.trace.probabilities.push_back(1.0);
    out.trace.success = true;
    return out;
}

inline QuadMeasurementResult quad_measurement_via_a8(const FockState &system, const FockState &ancilla,
                                                     RandomSource &rng) {
    SampledOutcomes src(rng);
    return quad_measurement_via_a8(system, ancilla, src);
}

/// Nondestructive measurement of the Hermitian quad g_x1 g_x2 g_x3 g_x4 (role
/// order) inside a larger state. The teleport variant brings the content
/// back with exp(-pi/4 g_B g_x) and discards the a8 block.
inline std::pair<int, FockState> measure_quad(const FockState &state, const std::array<int, 4> &x,
                                              const QuadMeasurer &measurer, OutcomeSource &source,
                                              ProtocolTrace &trace) {
    MajoranaMonomial q = MajoranaMonomial::product(0, {x[0], x[1], x[2], x[3]});
    detail::require(q.degree() == 4 && q.is_hermitian(), "quad needs four distinct modes");
    if (measurer.method == QuadMethod::projective) {
        auto [rec, post] = measure(state, q, source);
        trace.record("Q", rec);
        return {rec.outcome, post};
    }
    const int base = state.n_majoranas();
    const std::array<int, 4> a = {base + 1, base + 2, base + 3, base + 4};
    const std::array<int, 4> b = {base + 5, base + 6, base + 7, base + 8};
    auto tel = detail::teleport_measure(tensor(state, measurer.a8), x, a, b, source, trace);
    FockState s = std::move(tel.state);
    for (int k = 0; k < 4; ++k) {
        s = apply_pair_rotation(s, b[k], x[k], -M_PI / 4);
    }
    BlockSplit sp = split_high(s, state.n_modes());
    if (sp.residual > 1e-8) {
        throw NumericalFailure("a8 block did not factor out after teleported measurement");
    }
    trace.outcomes.emplace_back("Q", tel.sign);
    trace.probabilities.push_back(1.0);
    return {tel.sign, sp.low};
}

/// exp(i pi/4 g_i g_j g_k g_l) using the ancilla pair (a, b) already in the
/// state with -i g_a g_b = +1. The ancilla is restored.
inline std::pair<FockState, ProtocolTrace> quad_rotation_with_ancilla(const FockState &state, int i, int j, int k,
                                                                      int l, int a, int b,
                                                                      const QuadMeasurer &measurer,
                                                                      OutcomeSource &source) {
    const std::vector<int> roles = {i, j, k, l, a, b};
    for (std::size_t u = 0; u < roles.size(); ++u) {
        detail::require(roles[u] >= 1 && roles[u] <= state.n_majoranas(), "quad rotation mode out of range");
        for (std::size_t v = u + 1; v < roles.size(); ++v) {
            detail::require(roles[u] != roles[v], "quad rotation modes must be distinct");
        }
    }
    double anc = std::real(expectation(state, pair_observable(a, b)));
    if (std::abs(anc - 1.0) > 1e-10) {
        throw InvalidArgument("ancilla not in required state ((g_a + i g_b)|psi> != 0)");
    }
    ProtocolTrace trace;
    auto [s1, st] = measure_quad(state, {i, j, l, a}, measurer, source, trace);
    auto [rec2, st2] = measure(st, pair_observable(k, a), source);
    trace.record("F(" + std::to_string(k) + "," + std::to_string(a) + ")", rec2);
    const int s2 = rec2.outcome;
    FockState out = apply_pair_rotation(st2, k, b, s2 * M_PI / 4);
    trace.corrections.push_back(detail::pair_label(s2 > 0 ? "exp(+pi/4 " : "exp(-pi/4 ", k, b) + ")");
    if (s1 * s2 < 0) {
        out = apply_monomial(out, MajoranaMonomial::product(0, {i, j, k, l}));
        trace.corrections.push_back("g" + std::to_string(i) + " g" + std::to_string(j) + " g" + std::to_string(k) +
                                    " g" + std::to_string(l));
    }
    trace.success = true;
    return {out, trace};
}

/// exp(i pi/4 g_i g_j g_k g_l) on `state`, with a fresh ancilla fermion
/// appended and removed internally.
inline std::pair<FockState, ProtocolTrace> quad_rotation(const FockState &state, int i, int j, int k, int l,
                                                         const QuadMeasurer &measurer, OutcomeSource &source) {
    const int a = state.n_majoranas() + 1;
    auto [out, trace] = quad_rotation_with_ancilla(append_vacuum(state, 1), i, j, k, l, a, a + 1, measurer, source);
    BlockSplit sp = split_high(out, state.n_modes());
    if (sp.residual > 1e-8) {
        throw NumericalFailure("rotation ancilla did not return to vacuum");
    }
    return {sp.low, trace};
}

inline std::pair<FockState, ProtocolTrace> quad_rotation(const FockState &state, int i, int j, int k, int l,
                                                         RandomSource &rng) {
    SampledOutcomes src(rng);
    return quad_rotation(state, i, j, k, l, QuadMeasurer{}, src);
}

/// Lambda(Z) between qubits c and t:
///   e^{i pi/4} exp(-i pi/4 g3 g4 g5 g6) exp(-pi/4 g3 g4) exp(-pi/4 g5 g6)
/// written for c = 1, t = 2 (Z_c = -i g3 g4 on the code space). The
/// four-Majorana factor is exp(+i pi/4 g4 g3 g5 g6).
inline std::pair<EncodedRegister, ProtocolTrace> controlled_phase(const EncodedRegister &reg, int c, int t,
                                                                  const QuadMeasurer &measurer,
                                                                  OutcomeSource &source) {
    detail::require(c >= 1 && c <= reg.n_qubits && t >= 1 && t <= reg.n_qubits && c != t,
                    "controlled_phase needs two distinct qubits of the register");
    const int c3 = EncodingLayout::mode(c, 3), c4 = EncodingLayout::mode(c, 4);
    const int t1 = EncodingLayout::mode(t, 1), t2 = EncodingLayout::mode(t, 2);
    FockState s = apply_pair_rotation(reg.state, t1, t2, -M_PI / 4);
    s = apply_pair_rotation(s, c3, c4, -M_PI / 4);
    auto [rot, trace] = quad_rotation(s, c4, c3, t1, t2, measurer, source);
    // A faulty a8 resource can leave a Majorana error that exits the code
    // space; that is reported by decode, not here.
    return {EncodedRegister{reg.n_qubits, rot}, trace};
}

inline std::pair<EncodedRegister, ProtocolTrace> controlled_phase(const EncodedRegister &reg,
                                                                  const QuadMeasurer &measurer,
                                                                  OutcomeSource &source) {
    detail::require(reg.n_qubits == 2, "controlled_phase needs a two-qubit register");
    return controlled_phase(reg, 1, 2, measurer, source);
}

inline std::pair<EncodedRegister, ProtocolTrace> controlled_phase(const EncodedRegister &reg, RandomSource &rng) {
    SampledOutcomes src(rng);
    return controlled_phase(reg, QuadMeasurer{}, src);
}

/// CNOT = V^dagger CZ V with V = B_{a,c} on the target (V Z V^dagger = -X,
/// V X V^dagger = Z).
inline std::pair<EncodedRegister, ProtocolTrace> cnot(const EncodedRegister &reg, int c, int t,
                                                      const QuadMeasurer &measurer, OutcomeSource &source) {
    const BraidGenerator v = BraidGenerator::cw(EncodingLayout::mode(t, 1), EncodingLayout::mode(t, 3));
    EncodedRegister r{reg.n_qubits, apply_braid(reg.state, v)};
    auto [cz, trace] = controlled_phase(r, c, t, measurer, source);
    cz.state = apply_braid(cz.state, v.inverse());
    return {cz, trace};
}

/// T = diag(1, e^{i pi/4}) on a one-qubit register using an |a4> member:
/// measure Z (x) Z, CNOT system -> ancilla, measure the ancilla in Z, and
/// apply B_{1,2} (the phase gate diag(1, i)) when it reads 1.
inline std::pair<EncodedRegister, ProtocolTrace> pi8_gate(const EncodedRegister &reg, const EncodedRegister &a4,
                                                          const QuadMeasurer &measurer, OutcomeSource &source) {
    detail::require(reg.n_qubits == 1 && a4.n_qubits == 1, "pi8_gate needs one system and one ancilla qubit");
    EncodedRegister joint{2, tensor(reg.state, a4.state)};
    ProtocolTrace trace;
    // Z1 Z2 = -g1 g2 g5 g6
    auto [q, s] = measure_quad(joint.state, {1, 2, 5, 6}, measurer, source, trace);
    trace.outcomes.emplace_back("ZZ", -q);
    trace.probabilities.push_back(1.0);
    joint.state = s;
    auto [after, cnot_trace] = cnot(joint, 1, 2, measurer, source);
    trace.append(cnot_trace);
    auto [rec, measured] = measure(after.state, logical_axis_observable(2, 'Z').first, source);
    trace.record("Z2", rec);
    const int m = rec.outcome;
    FockState sys_joint = measured;
    if (m < 0) {
        sys_joint = apply_braid(sys_joint, BraidGenerator::cw(1, 2));
        trace.corrections.push_back("B 1 2");
    }
    BlockSplit sp = split_high(sys_joint, 2);
    if (sp.residual > 1e-8) {
        throw NumericalFailure("internal: pi8 ancilla did not factor out");
    }
    trace.success = true;
    return {EncodedRegister{1, sp.low}, trace};
}

inline std::pair<EncodedRegister, ProtocolTrace> pi8_gate(const EncodedRegister &reg, const NoisyState &a4,
                                                          RandomSource &rng) {
    const EncodedRegister &member = a4.sample(rng);
    SampledOutcomes src(rng);
    return pi8_gate(reg, member, QuadMeasurer{}, src);
}

inline Eigen::MatrixXcd ideal_t_gate() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
    m(1, 1) = std::polar(1.0, M_PI / 4);
    return m;
}

inline Eigen::MatrixXcd ideal_cz_gate() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
}

// ---------------------------------------------------------------------------
// Fidelity sweeps.

enum class GateProtocol { pi8, cz };

struct FidelityRow {
    double epsilon = 0.0;
    double mean = 0.0;
    double stderr_ = 0.0;
    double min = 1.0;
    int trials = 0;
};

inline Eigen::VectorXcd random_logical_vector(int n_qubits, RandomSource &rng) {
    Eigen::VectorXcd v(Eigen::Index{1} << n_qubits);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        v[k] = cplx(rng.normal(), rng.normal());
    }
    return v.normalized();
}

/// |<ideal|out>|^2 with the ideal output encoded, so weight that leaked out
/// of the code space counts as infidelity.
inline double encoded_fidelity(const Eigen::VectorXcd &ideal_logical, const EncodedRegister &out) {
    EncodedRegister want = encode_state(out.n_qubits, ideal_logical);
    return std::norm(overlap(want.state, out.state));
}

/// Output fidelity of one protocol run with a given pure ancilla member.
inline double protocol_fidelity(GateProtocol protocol, const Eigen::VectorXcd &input, const EncodedRegister &member,
                                RandomSource &rng, ProtocolTrace *trace_out = nullptr) {
    SampledOutcomes src(rng);
    if (protocol == GateProtocol::pi8) {
        auto [out, trace] = pi8_gate(encode_state(1, input), member, QuadMeasurer{}, src);
        if (trace_out) {
            *trace_out = trace;
        }
        return encoded_fidelity(ideal_t_gate() * input, out);
    }
    auto [out, trace] = controlled_phase(encode_state(2, input), QuadMeasurer::teleport(member), src);
    if (trace_out) {
        *trace_out = trace;
    }
    return encoded_fidelity(ideal_cz_gate() * input, out);
}

/// Mean output fidelity against the ideal gate for each epsilon. Inputs and
/// per-trial outcome streams are shared across epsilons; the ancilla
/// ensemble is averaged exactly by weight.
inline std::vector<FidelityRow> gate_fidelity_sweep(GateProtocol protocol, const std::vector<double> &epsilons,
                                                    int trials, NoiseModel noise, RandomSource &rng,
                                                    const std::optional<Eigen::VectorXcd> &fixed_input = {}) {
    detail::require(trials >= 1, "sweep needs at least one trial");
    const int nq = protocol == GateProtocol::pi8 ? 1 : 2;
    std::vector<Eigen::VectorXcd> inputs;
    std::vector<std::uint64_t> seeds;
    for (int t = 0; t < trials; ++t) {
        inputs.push_back(fixed_input ? fixed_input->normalized() : random_logical_vector(nq, rng));
        seeds.push_back(rng.next_u64());
    }
    std::vector<FidelityRow> rows;
    for (double eps : epsilons) {
        AncillaSpec spec{protocol == GateProtocol::pi8 ? AncillaKind::a4 : AncillaKind::a8, eps, noise};
        NoisyState anc = prepare_ancilla(spec);
        FidelityRow row;
        row.epsilon = eps;
        row.trials = trials;
        double sum = 0.0, sum2 = 0.0;
        for (int t = 0; t < trials; ++t) {
            double f = 0.0;
            for (const auto &[w, member] : anc.members) {
                RandomSource branch(seeds[t]);
                f += w * protocol_fidelity(protocol, inputs[t], member, branch);
            }
            sum += f;
            sum2 += f * f;
            row.min = std::min(row.min, f);
        }
        row.mean = sum / trials;
        double var = trials > 1 ? std::max(0.0, (sum2 - trials * row.mean * row.mean) / (trials - 1)) : 0.0;
        row.stderr_ = std::sqrt(var / trials);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace majlab
