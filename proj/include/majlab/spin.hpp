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

// Pauli strings on spin-1/2 chains and their Jordan-Wigner images.
//
// Spin s is bit s of the basis index. The Jordan-Wigner Majoranas are
//   a_s = S_s X_s,  b_s = -S_s Y_s,  S_s = Z_0 ... Z_{s-1},
// so Z_s = i a_s b_s. As monomials a_s = g_{2s+1} and b_s = g_{2s+2}.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "majlab/error.hpp"
#include "majlab/majorana_algebra.hpp"

namespace majlab {

using SparseMatrixC = Eigen::SparseMatrix<std::complex<double>>;

inline constexpr int kMaxSpins = 14;

struct PauliString {
    std::complex<double> coeff{1.0, 0.0};
    std::vector<char> letters;  // 'I', 'X', 'Y', 'Z' per site

    explicit PauliString(int n = 0) : letters(n, 'I') {}

    static PauliString single(int n, int site, char l, std::complex<double> c = 1.0) {
        detail::require(site >= 0 && site < n, "site out of range");
        PauliString p(n);
        p.letters[site] = l;
        p.coeff = c;
        return p;
    }

    int n_sites() const { return static_cast<int>(letters.size()); }

    PauliString operator*(const PauliString &o) const {
        detail::require(n_sites() == o.n_sites(), "Pauli strings on different chains");
        PauliString r(n_sites());
        r.coeff = coeff * o.coeff;
        for (int s = 0; s < n_sites(); ++s) {
            char a = letters[s], b = o.letters[s];
            if (a == 'I') {
                r.letters[s] = b;
            } else if (b == 'I') {
                r.letters[s] = a;
            } else if (a == b) {
                r.letters[s] = 'I';
            } else {
                // cyclic X -> Y -> Z gives +i
                int ia = a - 'X', ib = b - 'X';
                r.letters[s] = static_cast<char>('X' + (3 - ia - ib));
                r.coeff *= ((ib - ia + 3) % 3 == 1) ? std::complex<double>(0, 1) : std::complex<double>(0, -1);
            }
        }
        return r;
    }

    /// P|b> = amp |b'>.
    std::pair<std::uint64_t, std::complex<double>> act(std::uint64_t b) const {
        std::complex<double> amp = coeff;
        std::uint64_t out = b;
        for (int s = 0; s < n_sites(); ++s) {
            bool bit = (b >> s) & 1u;
            switch (letters[s]) {
                case 'X':
                    out ^= std::uint64_t{1} << s;
                    break;
                case 'Y':
                    out ^= std::uint64_t{1} << s;
                    amp *= bit ? std::complex<double>(0, -1) : std::complex<double>(0, 1);
                    break;
                case 'Z':
                    if (bit) {
                        amp = -amp;
                    }
                    break;
                default:
                    break;
            }
        }
        return {out, amp};
    }

    std::string to_string() const { return std::string(letters.begin(), letters.end()); }
};

namespace detail {

inline void check_spins(int n) {
    require(n >= 1, "need at least one spin");
    if (n > kMaxSpins) {
        throw InvalidArgument("too many spins: " + std::to_string(n) + " exceeds cap of " +
                              std::to_string(kMaxSpins));
    }
}

}  // namespace detail

/// Sum of weighted Pauli strings as a sparse matrix.
inline SparseMatrixC pauli_sum_matrix(int n, const std::vector<PauliString> &terms) {
    detail::check_spins(n);
    const std::uint64_t d = std::uint64_t{1} << n;
    std::vector<Eigen::Triplet<std::complex<double>>> trip;
    trip.reserve(terms.size() * d);
    for (const auto &t : terms) {
        detail::require(t.n_sites() == n, "Pauli string has wrong length");
        for (std::uint64_t b = 0; b < d; ++b) {
            auto [o, amp] = t.act(b);
            trip.emplace_back(static_cast<int>(o), static_cast<int>(b), amp);
        }
    }
    SparseMatrixC m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    m.setFromTriplets(trip.begin(), trip.end());
    m.prune(std::complex<double>(0.0));
    return m;
}

inline SparseMatrixC pauli_matrix(const PauliString &p) { return pauli_sum_matrix(p.n_sites(), {p}); }

/// Jordan-Wigner Majorana g_k (k = 1..2n) as a Pauli string.
inline PauliString jw_majorana(int n, int k) {
    detail::require(k >= 1 && k <= 2 * n, "Majorana index out of range");
    int s = (k - 1) / 2;
    PauliString p(n);
    for (int t = 0; t < s; ++t) {
        p.letters[t] = 'Z';
    }
    if (k % 2 == 1) {
        p.letters[s] = 'X';
    } else {
        p.letters[s] = 'Y';
        p.coeff = -1.0;
    }
    return p;
}

/// A Pauli string rewritten as coefficient times Majorana monomial.
struct JwMonomial {
    double sign = 1.0;  // real prefactor; the i-powers live in `monomial`
    MajoranaMonomial monomial;
};

inline JwMonomial pauli_to_majorana(const PauliString &p) {
    // coeff must be a power of i times a real number
    MajoranaMonomial m = MajoranaMonomial::identity();
    double sign = 1.0;
    for (int s = 0; s < p.n_sites(); ++s) {
        const int a = 2 * s + 1, b = 2 * s + 2;
        MajoranaMonomial string = MajoranaMonomial::identity();
        for (int t = 0; t < s; ++t) {
            string = string * MajoranaMonomial::product(1, {2 * t + 1, 2 * t + 2});
        }
        switch (p.letters[s]) {
            case 'X':
                m = m * string * MajoranaMonomial::mode(a);
                break;
            case 'Y':
                m = m * string * MajoranaMonomial::mode(b);
                sign = -sign;
                break;
            case 'Z':
                m = m * MajoranaMonomial::product(1, {a, b});
                break;
            default:
                break;
        }
    }
    std::complex<double> c = p.coeff;
    if (std::abs(c.imag()) < 1e-15) {
        sign *= c.real();
    } else if (std::abs(c.real()) < 1e-15) {
        sign *= c.imag();
        m = m.times_i();
    } else {
        throw InvalidArgument("Pauli coefficient must be real or imaginary");
    }
    return {sign, m};
}

}  // namespace majlab
