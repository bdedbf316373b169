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

// Logical qubits encoded in four Majoranas each.
//
// Qubit q uses g_{4q-3..4q}, i.e. fermion modes 2q-1 and 2q. The code space
// is g_{4q-3} g_{4q-2} g_{4q-1} g_{4q} = -1, which forces n_{2q-1} = n_{2q}.
// Logical |0> is the vacuum of both modes; logical |1> is defined as X|0>
// with X = -i g_{4q-2} g_{4q-1}, which fixes the relative phase of the basis.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "majlab/error.hpp"
#include "majlab/fock.hpp"
#include "majlab/majorana_algebra.hpp"

namespace majlab {

inline constexpr int kDefaultMaxQubits = 3;
inline constexpr double kLeakTolerance = 1e-8;

struct EncodedRegister {
    int n_qubits = 1;
    FockState state;

    EncodingLayout layout() const { return {n_qubits}; }
};

namespace detail {

inline void check_qubits(int n, int max_qubits) {
    require(n >= 1, "register needs at least one qubit");
    if (n > max_qubits || 2 * n > kDefaultMaxModes) {
        throw InvalidArgument("too many qubits: " + std::to_string(n));
    }
}

}  // namespace detail

/// Fock vector of the logical basis state |b_1 ... b_n>, where qubit q's bit
/// is bit q-1 of `index`.
inline FockState logical_basis_state(int n_qubits, std::uint64_t index) {
    FockState s = vacuum(2 * n_qubits);
    for (int q = 1; q <= n_qubits; ++q) {
        if ((index >> (q - 1)) & 1u) {
            s = apply_monomial(s, EncodingLayout::letter(q, 'X'));
        }
    }
    return s;
}

inline EncodedRegister encode_basis(const std::vector<int> &bits, int max_qubits = kDefaultMaxQubits) {
    int n = static_cast<int>(bits.size());
    detail::check_qubits(n, max_qubits);
    std::uint64_t index = 0;
    for (int q = 0; q < n; ++q) {
        detail::require(bits[q] == 0 || bits[q] == 1, "logical bits must be 0 or 1");
        index |= static_cast<std::uint64_t>(bits[q]) << q;
    }
    return {n, logical_basis_state(n, index)};
}

/// Encodes an arbitrary logical vector (normalized internally).
inline EncodedRegister encode_state(int n_qubits, const Eigen::VectorXcd &logical,
                                    int max_qubits = kDefaultMaxQubits) {
    detail::check_qubits(n_qubits, max_qubits);
    detail::require(logical.size() == (Eigen::Index{1} << n_qubits), "logical vector has wrong length");
    double nrm = logical.norm();
    detail::require(nrm > kZeroProbability, "logical vector is zero");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << (2 * n_qubits));
    for (Eigen::Index k = 0; k < logical.size(); ++k) {
        if (logical[k] != cplx(0.0)) {
            v += logical[k] * logical_basis_state(n_qubits, static_cast<std::uint64_t>(k)).amplitudes();
        }
    }
    return {n_qubits, FockState(2 * n_qubits, v / nrm)};
}

inline std::vector<double> constraint_expectations(const EncodedRegister &reg) {
    std::vector<double> out;
    for (int q = 1; q <= reg.n_qubits; ++q) {
        out.push_back(std::real(expectation(reg.state, EncodingLayout::constraint(q))));
    }
    return out;
}

inline bool in_code_space(const EncodedRegister &reg, double tol = 1e-10) {
    for (double c : constraint_expectations(reg)) {
        if (std::abs(c + 1.0) > tol) {
            return false;
        }
    }
    return true;
}

/// Coordinates of the register in the logical basis with the first nonzero
/// amplitude made real and positive.
inline Eigen::VectorXcd decode(const EncodedRegister &reg, double tol = kLeakTolerance) {
    Eigen::Index d = Eigen::Index{1} << reg.n_qubits;
    Eigen::VectorXcd c(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        c[k] = overlap(logical_basis_state(reg.n_qubits, static_cast<std::uint64_t>(k)), reg.state);
    }
    double total = reg.state.amplitudes().squaredNorm();
    if (total - c.squaredNorm() > tol) {
        throw LeakageError("leaked: weight " + std::to_string(total - c.squaredNorm()) +
                           " outside the logical subspace");
    }
    for (Eigen::Index k = 0; k < d; ++k) {
        if (std::abs(c[k]) > 1e-12) {
            c *= std::conj(c[k]) / std::abs(c[k]);
            c[k] = std::abs(c[k]);
            break;
        }
    }
    return c;
}

inline EncodedRegister apply_logical(const EncodedRegister &reg, const BraidWord &word) {
    detail::require(word.max_mode() <= reg.layout().n_majoranas(), "braid word acts outside the register");
    EncodedRegister out = reg;
    for (const auto &g : word.generators) {
        out.state = apply_braid(out.state, g);
        if (!in_code_space(out)) {
            throw LeakageError("internal: " + g.to_string() + " violated the code-space constraint");
        }
    }
    return out;
}

/// Monomial measured for a logical Pauli axis, and the sign relating its
/// outcome to the Pauli eigenvalue. Z and X are pair observables F_{a,b} and
/// F_{b,c}; Y = -F_{a,c}.
inline std::pair<MajoranaMonomial, int> logical_axis_observable(int qubit, char axis) {
    int a = EncodingLayout::mode(qubit, 1), b = EncodingLayout::mode(qubit, 2), c = EncodingLayout::mode(qubit, 3);
    switch (axis) {
        case 'Z':
            return {pair_observable(a, b), 1};
        case 'X':
            return {pair_observable(b, c), 1};
        case 'Y':
            return {pair_observable(a, c), -1};
        default:
            throw InvalidArgument(std::string("axis not realizable as a pair measurement: ") + axis);
    }
}

inline std::pair<int, EncodedRegister> measure_logical(const EncodedRegister &reg, int qubit, char axis,
                                                       OutcomeSource &source) {
    detail::require(qubit >= 1 && qubit <= reg.n_qubits, "qubit out of range");
    auto [obs, sign] = logical_axis_observable(qubit, axis);
    auto [rec, post] = measure(reg.state, obs, source);
    return {sign * rec.outcome, EncodedRegister{reg.n_qubits, post}};
}

inline std::pair<int, EncodedRegister> measure_logical(const EncodedRegister &reg, int qubit, char axis,
                                                       RandomSource &rng) {
    SampledOutcomes src(rng);
    return measure_logical(reg, qubit, axis, src);
}

/// |<a|b>| for logical vectors; the comparison used for "equal up to global
/// phase".
inline double phase_insensitive_overlap(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) {
    return std::abs(a.normalized().dot(b.normalized()));
}

/// Number of Schmidt coefficients above tol for a two-qubit logical vector
/// (qubit 1 = low index bit).
inline int schmidt_rank_2q(const Eigen::VectorXcd &v, double tol = 1e-8) {
    detail::require(v.size() == 4, "schmidt_rank_2q needs a two-qubit vector");
    Eigen::Matrix2cd m;
    for (int q2 = 0; q2 < 2; ++q2) {
        for (int q1 = 0; q1 < 2; ++q1) {
            m(q1, q2) = v[q1 + 2 * q2];
        }
    }
    Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2cd>(m).singularValues() / v.norm();
    return (sv[0] > tol ? 1 : 0) + (sv[1] > tol ? 1 : 0);
}

}  // namespace majlab
