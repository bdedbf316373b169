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

// Dense state-vector simulation of n fermion modes (2n Majorana modes).
//
// Basis: occupation bitstrings, fermion mode j (1-based) is bit j-1. Majoranas
// pair as f_j = (g_{2j-1} + i g_{2j}) / 2, and f_j carries the Jordan-Wigner
// sign (-1)^{n_1 + ... + n_{j-1}}.

#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "majlab/error.hpp"
#include "majlab/majorana_algebra.hpp"

namespace majlab {

using cplx = std::complex<double>;

inline constexpr int kDefaultMaxModes = 14;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kZeroProbability = 1e-12;

class FockState {
   public:
    FockState() : FockState(1) {}

    explicit FockState(int n_modes, int max_modes = kDefaultMaxModes) : n_modes_(n_modes) {
        detail::require(n_modes >= 1, "FockState needs at least one mode");
        if (n_modes > max_modes) {
            throw InvalidArgument("state too large: " + std::to_string(n_modes) + " modes exceeds cap of " +
                                  std::to_string(max_modes));
        }
        amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_modes);
        amps_[0] = 1.0;
    }

    FockState(int n_modes, Eigen::VectorXcd amps, int max_modes = kDefaultMaxModes) : FockState(n_modes, max_modes) {
        detail::require(amps.size() == (Eigen::Index{1} << n_modes), "amplitude vector has wrong length");
        amps_ = std::move(amps);
    }

    int n_modes() const { return n_modes_; }
    int n_majoranas() const { return 2 * n_modes_; }
    Eigen::Index dim() const { return amps_.size(); }

    const Eigen::VectorXcd &amplitudes() const { return amps_; }
    Eigen::VectorXcd &amplitudes() { return amps_; }
    cplx operator[](Eigen::Index k) const { return amps_[k]; }

    double norm() const { return amps_.norm(); }

    void normalize() {
        double n = amps_.norm();
        if (n < kZeroProbability) {
            throw NumericalFailure("cannot normalize a zero state");
        }
        amps_ /= n;
    }

    static FockState basis(int n_modes, std::uint64_t bits) {
        FockState s(n_modes);
        detail::require(bits < static_cast<std::uint64_t>(s.dim()), "basis index out of range");
        s.amps_[0] = 0.0;
        s.amps_[static_cast<Eigen::Index>(bits)] = 1.0;
        return s;
    }

   private:
    int n_modes_;
    Eigen::VectorXcd amps_;
};

inline FockState vacuum(int n_modes, int max_modes = kDefaultMaxModes) { return FockState(n_modes, max_modes); }

inline cplx overlap(const FockState &a, const FockState &b) {
    detail::require(a.n_modes() == b.n_modes(), "overlap: dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

namespace detail {

inline void check_mode(const FockState &s, int k) {
    require(k >= 1 && k <= s.n_majoranas(), "Majorana index " + std::to_string(k) + " out of range");
}

/// out = g_k in; out and in must not alias.
inline void apply_majorana_into(int k, const Eigen::VectorXcd &in, Eigen::VectorXcd &out) {
    const int bit = (k - 1) / 2;
    const std::uint64_t mask = std::uint64_t{1} << bit;
    const std::uint64_t below = mask - 1;
    const bool odd = (k % 2) == 1;
    const cplx I(0.0, 1.0);
    for (Eigen::Index x = 0; x < in.size(); ++x) {
        auto ux = static_cast<std::uint64_t>(x);
        double sign = (std::popcount(ux & below) % 2) ? -1.0 : 1.0;
        auto y = static_cast<Eigen::Index>(ux ^ mask);
        if (odd) {
            out[y] = sign * in[x];  // f^dagger + f
        } else {
            out[y] = ((ux & mask) ? -I : I) * sign * in[x];  // i (f^dagger - f)
        }
    }
}

inline cplx ipow(int p) {
    static const cplx kPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPow[mod4(p)];
}

}  // namespace detail

/// m |state>; the factor rightmost in m acts first.
inline Eigen::VectorXcd monomial_times(const MajoranaMonomial &m, const Eigen::VectorXcd &v) {
    Eigen::VectorXcd cur = v;
    Eigen::VectorXcd tmp(v.size());
    for (auto it = m.modes.rbegin(); it != m.modes.rend(); ++it) {
        detail::apply_majorana_into(*it, cur, tmp);
        cur.swap(tmp);
    }
    return cur * detail::ipow(m.phase);
}

inline FockState apply_monomial(const FockState &state, const MajoranaMonomial &m) {
    for (int k : m.modes) {
        detail::check_mode(state, k);
    }
    FockState out = state;
    out.amplitudes() = monomial_times(m, state.amplitudes());
    return out;
}

inline cplx expectation(const FockState &state, const MajoranaMonomial &m) {
    for (int k : m.modes) {
        detail::check_mode(state, k);
    }
    return state.amplitudes().dot(monomial_times(m, state.amplitudes()));
}

/// exp(theta g_i g_j) = cos(theta) + sin(theta) g_i g_j, indices in the given
/// order (g_j g_i = -g_i g_j is handled by the monomial product).
inline FockState apply_pair_rotation(const FockState &state, int i, int j, double theta) {
    if (i == j) {
        throw InvalidArgument("invalid rotation: i == j");
    }
    detail::check_mode(state, i);
    detail::check_mode(state, j);
    MajoranaMonomial g = MajoranaMonomial::product(0, {i, j});
    FockState out = state;
    out.amplitudes() = std::cos(theta) * state.amplitudes() + std::sin(theta) * monomial_times(g, state.amplitudes());
    return out;
}

/// exp(i theta Q) for a Hermitian monomial Q with Q^2 = 1.
inline FockState apply_hermitian_rotation(const FockState &state, const MajoranaMonomial &q, double theta) {
    detail::require(q.is_hermitian(), "rotation generator must be Hermitian");
    for (int k : q.modes) {
        detail::check_mode(state, k);
    }
    FockState out = state;
    out.amplitudes() = std::cos(theta) * state.amplitudes() +
                       cplx(0.0, std::sin(theta)) * monomial_times(q, state.amplitudes());
    return out;
}

inline FockState apply_braid(const FockState &state, const BraidGenerator &g) {
    return apply_pair_rotation(state, g.i, g.j, g.clockwise() ? -M_PI / 4 : M_PI / 4);
}

/// Applies the word in application order (first generator first).
inline FockState apply_braid_word(const FockState &state, const BraidWord &w) {
    FockState out = state;
    for (const auto &g : w.generators) {
        out = apply_braid(out, g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Randomness and outcome selection.

/// Seeded source of uniforms. Identical seeds give identical sequences on a
/// given platform; uniforms use the top 53 bits of mt19937_64 so no
/// implementation-defined distribution is involved.
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draws() const { return draws_; }

    double uniform() {
        ++draws_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_u64() {
        ++draws_;
        return engine_();
    }

    double normal() {
        // Box-Muller on our own uniforms.
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) {
            u1 = 1e-300;
        }
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Index drawn with the given (nonnegative, summing to ~1) weights.
    std::size_t categorical(const std::vector<double> &weights) {
        double u = uniform();
        double acc = 0.0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            acc += weights[k];
            if (u < acc) {
                return k;
            }
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

   private:
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

/// Decides measurement outcomes. Sampling draws one uniform per outcome;
/// forcing replays a prescribed outcome list (used to enumerate branches).
class OutcomeSource {
   public:
    virtual ~OutcomeSource() = default;
    /// Returns +1 or -1 given the Born probability of +1.
    virtual int choose(double p_plus) = 0;
};

class SampledOutcomes : public OutcomeSource {
   public:
    explicit SampledOutcomes(RandomSource &rng) : rng_(&rng) {}
    int choose(double p_plus) override { return rng_->uniform() < p_plus ? 1 : -1; }

   private:
    RandomSource *rng_;
};

class ForcedOutcomes : public OutcomeSource {
   public:
    explicit ForcedOutcomes(std::vector<int> forced) : forced_(std::move(forced)) {}

    int choose(double p_plus) override {
        int s = 1;
        if (cursor_ < forced_.size()) {
            s = forced_[cursor_];
        }
        ++cursor_;
        probabilities_.push_back(s > 0 ? p_plus : 1.0 - p_plus);
        return s;
    }

    std::size_t consumed() const { return cursor_; }
    const std::vector<int> &forced() const { return forced_; }
    const std::vector<double> &probabilities() const { return probabilities_; }

   private:
    std::vector<int> forced_;
    std::size_t cursor_ = 0;
    std::vector<double> probabilities_;
};

/// Runs fn(ForcedOutcomes&) once per outcome branch with nonzero weight, in
/// lexicographic order (+1 before -1). fn returns normally for a completed
/// branch; ImpossibleOutcome marks a zero-weight branch, which is skipped.
template <typename Fn>
void enumerate_branches(Fn &&fn, std::size_t max_branches = 1u << 16) {
    std::vector<int> prefix;
    for (std::size_t n = 0; n < max_branches; ++n) {
        ForcedOutcomes src(prefix);
        try {
            fn(src);
        } catch (const ImpossibleOutcome &) {
            // Zero-weight branch; its continuation is pruned below.
        }
        std::vector<int> path = prefix;
        path.resize(std::max(src.consumed(), prefix.size()), 1);
        path.resize(src.consumed());
        while (!path.empty() && path.back() == -1) {
            path.pop_back();
        }
        if (path.empty()) {
            return;
        }
        path.back() = -1;
        prefix = path;
    }
    throw NumericalFailure("enumerate_branches: too many branches");
}

// ---------------------------------------------------------------------------
// Measurements.

struct MeasurementRecord {
    MajoranaMonomial observable;
    int outcome = 1;
    double pre_probability = 1.0;
};

/// Projects onto (1 + s Q)/2 for Hermitian Q with Q^2 = 1. Returns the Born
/// weight and the renormalized state.
inline std::pair<double, FockState> project(const FockState &state, const MajoranaMonomial &q, int sign) {
    detail::require(q.is_hermitian(), "projector needs a Hermitian monomial");
    detail::require(sign == 1 || sign == -1, "projection sign must be +1 or -1");
    for (int k : q.modes) {
        detail::check_mode(state, k);
    }
    Eigen::VectorXcd qv = monomial_times(q, state.amplitudes());
    FockState out = state;
    out.amplitudes() = 0.5 * (state.amplitudes() + static_cast<double>(sign) * qv);
    double p = out.amplitudes().squaredNorm();
    if (p < kZeroProbability) {
        throw ImpossibleOutcome("impossible outcome " + std::to_string(sign) + " for " + q.to_string());
    }
    out.amplitudes() /= std::sqrt(p);
    return {p, out};
}

inline std::pair<MeasurementRecord, FockState> measure(const FockState &state, const MajoranaMonomial &q,
                                                       OutcomeSource &source) {
    detail::require(q.is_hermitian(), "observable must be a Hermitian monomial");
    for (int k : q.modes) {
        detail::check_mode(state, k);
    }
    double total = state.amplitudes().squaredNorm();
    if (total < kZeroProbability) {
        throw NumericalFailure("measurement on a zero state");
    }
    double ev = std::real(expectation(state, q)) / total;
    double p_plus = std::clamp(0.5 * (1.0 + ev), 0.0, 1.0);
    if (p_plus < kZeroProbability && 1.0 - p_plus < kZeroProbability) {
        throw NumericalFailure("both projections vanish");
    }
    int s = source.choose(p_plus);
    auto [p, post] = project(state, q, s);
    return {MeasurementRecord{q, s, s > 0 ? p_plus : 1.0 - p_plus}, post};
}

inline std::pair<MeasurementRecord, FockState> measure(const FockState &state, const MajoranaMonomial &q,
                                                       RandomSource &rng) {
    SampledOutcomes src(rng);
    return measure(state, q, src);
}

/// F_{i,j} = -i g_i g_j.
inline MajoranaMonomial pair_observable(int i, int j) {
    detail::require(i != j, "pair observable needs distinct modes");
    return MajoranaMonomial::product(3, {i, j});
}

inline std::pair<MeasurementRecord, FockState> measure_pair(const FockState &state, int i, int j,
                                                            OutcomeSource &source) {
    return measure(state, pair_observable(i, j), source);
}

inline std::pair<MeasurementRecord, FockState> measure_pair(const FockState &state, int i, int j,
                                                            RandomSource &rng) {
    SampledOutcomes src(rng);
    return measure_pair(state, i, j, src);
}

inline MajoranaMonomial quad_observable(int i, int j, int k, int l) {
    detail::require(i != j && i != k && i != l && j != k && j != l && k != l, "quad needs distinct modes");
    return MajoranaMonomial::product(0, {i, j, k, l});
}

/// Applies (1 +/- g_i g_j g_k g_l)/2.
inline std::pair<double, FockState> project_quad(const FockState &state, int i, int j, int k, int l, int sign) {
    return project(state, quad_observable(i, j, k, l), sign);
}

/// Total fermion parity (-1)^N as an operator expectation.
inline double parity_expectation(const FockState &state) {
    double acc = 0.0;
    const auto &a = state.amplitudes();
    for (Eigen::Index x = 0; x < a.size(); ++x) {
        double w = std::norm(a[x]);
        acc += (std::popcount(static_cast<std::uint64_t>(x)) % 2) ? -w : w;
    }
    return acc;
}

inline double number_expectation(const FockState &state, int mode) {
    detail::require(mode >= 1 && mode <= state.n_modes(), "fermion mode out of range");
    double acc = 0.0;
    const auto &a = state.amplitudes();
    for (Eigen::Index x = 0; x < a.size(); ++x) {
        if ((static_cast<std::uint64_t>(x) >> (mode - 1)) & 1u) {
            acc += std::norm(a[x]);
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Block structure: low modes first, high modes appended.

/// |low> (x) |high> with the high block's modes placed after the low block's.
/// Amplitude of bits (x | y << n_low) is low[x] * high[y].
inline FockState tensor(const FockState &low, const FockState &high, int max_modes = kDefaultMaxModes) {
    int n = low.n_modes() + high.n_modes();
    if (n > max_modes) {
        throw InvalidArgument("state too large: " + std::to_string(n) + " modes");
    }
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (Eigen::Index y = 0; y < high.dim(); ++y) {
        v.segment(y * low.dim(), low.dim()) = high[y] * low.amplitudes();
    }
    return FockState(n, std::move(v), max_modes);
}

inline FockState append_vacuum(const FockState &s, int extra, int max_modes = kDefaultMaxModes) {
    return tensor(s, vacuum(extra, max_modes), max_modes);
}

struct BlockSplit {
    FockState low;
    FockState high;
    double residual = 0.0;  // distance of the state from low (x) high
};

/// Factors a state as low (x) high (the inverse of tensor). The high block
/// is taken from its largest column; the residual reports how far the state
/// is from a product.
inline BlockSplit split_high(const FockState &s, int n_low) {
    detail::require(n_low >= 1 && n_low < s.n_modes(), "split_high: bad block size");
    int n_high = s.n_modes() - n_low;
    Eigen::Index dl = Eigen::Index{1} << n_low;
    Eigen::Index dh = Eigen::Index{1} << n_high;
    Eigen::Map<const Eigen::MatrixXcd> m(s.amplitudes().data(), dl, dh);  // m(x, y)
    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index y = 0; y < dh; ++y) {
        double c = m.col(y).squaredNorm();
        if (c > best_norm) {
            best_norm = c;
            best = y;
        }
    }
    Eigen::VectorXcd low = m.col(best);
    low /= low.norm();
    // m(x,y) ~ low[x] * h[y]  =>  h[y] = sum_x conj(low[x]) m(x,y)
    Eigen::VectorXcd high = (low.adjoint() * m).transpose();
    double hn = high.norm();
    FockState lo(n_low, low);
    FockState hi = hn > 0 ? FockState(n_high, high / hn) : FockState(n_high);
    Eigen::MatrixXcd recon = low * high.transpose();
    double residual = (m - recon).norm();
    return {lo, hi, residual};
}

/// Dense matrix of a monomial on n fermion modes (column x = m |x>).
inline Eigen::MatrixXcd operator_matrix(int n_modes, const MajoranaMonomial &m) {
    FockState probe(n_modes);
    for (int k : m.modes) {
        detail::check_mode(probe, k);
    }
    Eigen::Index d = Eigen::Index{1} << n_modes;
    Eigen::MatrixXcd out(d, d);
    for (Eigen::Index x = 0; x < d; ++x) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
        e[x] = 1.0;
        out.col(x) = monomial_times(m, e);
    }
    return out;
}

inline Eigen::MatrixXcd braid_matrix(int n_modes, const BraidGenerator &g) {
    Eigen::Index d = Eigen::Index{1} << n_modes;
    double s = g.clockwise() ? -1.0 : 1.0;
    return (Eigen::MatrixXcd::Identity(d, d) + s * operator_matrix(n_modes, g.bilinear())) / std::sqrt(2.0);
}

}  // namespace majlab
