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

#include <random>

#include <gtest/gtest.h>

#include "majlab/honeycomb.hpp"
#include "oracles.hpp"

using namespace majlab;

namespace {

std::string phase_oracle(double x, double y, double z) {
    if (x > y + z) return "Ax";
    if (y > z + x) return "Ay";
    if (z > x + y) return "Az";
    if (x == y + z || y == z + x || z == x + y) return "boundary";
    return "B_gapless";
}

Eigen::MatrixXcd spin_oracle(const LatticeSpec &lat, const HoneycombCouplings &c) {
    const int n = lat.n_sites();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(1 << n, 1 << n);
    for (const auto &l : lat.links) {
        std::vector<char> letters(n, 'I');
        letters[l.a] = letters[l.b] = static_cast<char>(std::toupper(l.type));
        h -= c.J(l.type) * oracle::pauli_string(letters);
    }
    return h;
}

/// Lowest eigenvalue of H restricted to W_p = +1 for every plaquette.
double vortex_free_ed(const Eigen::MatrixXcd &h, const std::vector<SparseMatrixC> &w) {
    const Eigen::Index d = h.rows();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(d, d);
    for (const auto &wp : w) {
        p = p * (Eigen::MatrixXcd::Identity(d, d) + Eigen::MatrixXcd(wp)) / 2.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ps(p);
    std::vector<Eigen::Index> cols;
    for (Eigen::Index k = 0; k < d; ++k) {
        if (ps.eigenvalues()[k] > 0.5) {
            cols.push_back(k);
        }
    }
    Eigen::MatrixXcd basis(d, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        basis.col(k) = ps.eigenvectors().col(cols[k]);
    }
    Eigen::MatrixXcd hr = basis.adjoint() * h * basis;
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(hr, Eigen::EigenvaluesOnly).eigenvalues()[0];
}

/// Minimum JW energy over all flag assignments whose plaquette products are +1.
double vortex_free_jw(const LatticeSpec &lat, const HoneycombCouplings &c) {
    const int m = static_cast<int>(lat.z_links().size());
    double best = std::numeric_limits<double>::infinity();
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> f(m);
        for (int k = 0; k < m; ++k) {
            f[k] = (mask >> k) & 1 ? -1 : 1;
        }
        bool ok = true;
        for (const auto &p : lat.plaquettes) {
            int prod = plaquette_alpha_sign(lat, p);
            for (int k : p.z_links) {
                prod *= f[k];
            }
            ok &= prod == 1;
        }
        if (ok) {
            best = std::min(best, quadratic_spectrum(build_jw_quadratic(lat, c, f)).ground_energy);
        }
    }
    return best;
}

}  // namespace

TEST(Dispersion, Examples) {
    HoneycombCouplings c;
    SpectrumSample s = dispersion(c, 0, 0);
    EXPECT_NEAR(s.eps, -2, 1e-15);
    EXPECT_NEAR(s.delta, 0, 1e-15);
    EXPECT_NEAR(s.energy, 2, 1e-15);
    SpectrumSample d = dispersion(c, M_PI / 3, -M_PI / 3);
    EXPECT_NEAR(d.eps, 0, 1e-14);
    EXPECT_NEAR(d.delta, 0, 1e-14);
    EXPECT_NEAR(d.energy, 0, 1e-14);
    for (double t : {0.02, 0.05, 0.1}) {
        HoneycombCouplings f{1, 1, 1, t, t, t};
        SpectrumSample e = dispersion(f, M_PI / 3, -M_PI / 3);
        EXPECT_NEAR(e.energy, 2 * std::sqrt(3.0) * t * t * t, 1e-13);
    }
}

TEST(Dispersion, MatchesFormulaAndInvariants) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> q(-M_PI, M_PI), j(0.05, 2);
    for (int t = 0; t < 200; ++t) {
        HoneycombCouplings c{j(rng), j(rng), j(rng)};
        double qx = q(rng), qy = q(rng);
        SpectrumSample s = dispersion(c, qx, qy);
        double eps = 2 * c.Jz - 2 * c.Jx * std::cos(qx) - 2 * c.Jy * std::cos(qy);
        double del = 2 * c.Jx * std::sin(qx) + 2 * c.Jy * std::sin(qy);
        EXPECT_NEAR(s.energy, std::hypot(eps, del), 1e-12);
        EXPECT_EQ(s.delta_tilde, 0.0);
        EXPECT_GE(s.energy, 0.0);
        HoneycombCouplings f{1, 1, 1, 0.1, 0.2, 0.3};
        EXPECT_NEAR(dispersion(f, qx, qy).delta_tilde, -dispersion(f, -qx, -qy).delta_tilde, 1e-15);
    }
    EXPECT_NEAR(dispersion({1, 1, 1, 0.1, 0.2, 0.3}, 0, 0).delta_tilde, 0.0, 1e-15);
    EXPECT_EQ(dispersion({1, 1, 1, 0.1, 0.0, 0.3}, 0.3, -1.1).delta_tilde, 0.0);
}

TEST(Dispersion, FieldOutOfDomain) {
    EXPECT_THROW(dispersion({1, 1, 2, 0.1, 0.1, 0.1}, 0, 0), InvalidArgument);
    try {
        dispersion({1, 2, 1, 0.1, 0, 0}, 0, 0);
        ADD_FAILURE();
    } catch (const InvalidArgument &e) {
        EXPECT_NE(std::string(e.what()).find("perturbative formula out of domain"), std::string::npos);
    }
}

TEST(ClassifyPhase, Examples) {
    EXPECT_EQ(classify_phase(1, 1, 1), PhaseLabel::B_gapless);
    EXPECT_EQ(classify_phase(2, 0.5, 0.5), PhaseLabel::Ax);
    EXPECT_EQ(classify_phase(1, 1, 2), PhaseLabel::boundary);
    EXPECT_EQ(classify_phase(0.1, 3, 1), PhaseLabel::Ay);
    EXPECT_EQ(classify_phase(0.1, 0.1, 1), PhaseLabel::Az);
    EXPECT_THROW(classify_phase(0, 1, 1), InvalidArgument);
    EXPECT_THROW(classify_phase(1, -1, 1), InvalidArgument);
}

TEST(ClassifyPhase, RandomAgainstInequalities) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> j(1e-3, 3);
    for (int t = 0; t < 2000; ++t) {
        double x = j(rng), y = j(rng), z = j(rng);
        EXPECT_EQ(to_string(classify_phase(x, y, z)), phase_oracle(x, y, z));
    }
}

TEST(Gap, Examples) {
    // grid multiple of 6 contains (pi/3, -pi/3)
    EXPECT_LT(bz_min_gap({1, 1, 1}, 60).min_energy, 1e-12);
    EXPECT_GT(bz_min_gap({0.1, 0.1, 1}, 60).min_energy, 0.1);
    HoneycombCouplings f{1, 1, 1, 0.1, 0.1, 0.1};
    GapResult g = bz_min_gap(f, 60, 12);
    EXPECT_NEAR(g.min_energy, 2 * std::sqrt(3.0) * 1e-3, 0.02 * 2 * std::sqrt(3.0) * 1e-3);
    EXPECT_THROW(bz_min_gap({1, 1, 1}, 2), InvalidArgument);
}

TEST(Gap, GaplessIffPhaseB) {
    // thirty couplings kept away from the phase boundaries plus the boundary itself
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> j(0.05, 1.5);
    int checked = 0;
    while (checked < 30) {
        double x = j(rng), y = j(rng), z = j(rng);
        double s = x + y + z;
        double margin = std::min({y + z - x, z + x - y, x + y - z});
        if (std::abs(margin) < 0.1 * s) {
            continue;
        }
        HoneycombCouplings c{x, y, z};
        bool gapless = numerically_gapless(c, 241);
        EXPECT_EQ(gapless, classify_phase(x, y, z) == PhaseLabel::B_gapless) << x << " " << y << " " << z;
        EXPECT_GE(bz_min_gap(c, 241).min_energy, 0.0);
        ++checked;
    }
    EXPECT_TRUE(numerically_gapless({1, 1, 2}, 241));
    EXPECT_TRUE(numerically_gapless({0.5, 1.5, 1}, 241));
}

TEST(Lattice, BrickWallStructure) {
    for (auto [r, c] : {std::pair{2, 3}, {2, 4}, {3, 3}, {3, 4}, {2, 5}}) {
        LatticeSpec lat = brick_wall(r, c);
        for (int s = 0; s < lat.n_sites(); ++s) {
            int deg = 0;
            for (char t : {'x', 'y', 'z'}) {
                int count = 0;
                for (const auto &l : lat.links) {
                    count += l.type == t && (l.a == s || l.b == s);
                }
                EXPECT_LE(count, 1);
                deg += count;
            }
            EXPECT_LE(deg, 3);
        }
        for (int k : lat.z_links()) {
            EXPECT_NE(lat.black(lat.links[k].a), lat.black(lat.links[k].b));
        }
    }
    EXPECT_THROW(brick_wall(4, 4), InvalidArgument);  // 16 spins
}

TEST(SpinHamiltonian, MatchesKroneckerOracle) {
    LatticeSpec lat = brick_wall(2, 3);
    HoneycombCouplings c{0.3, 0.7, 1.1};
    EXPECT_LT(oracle::max_abs(build_spin_hamiltonian(lat, c).dense() - spin_oracle(lat, c)), 1e-14);
}

TEST(SpinHamiltonian, HexagonCommutesWithPlaquette) {
    LatticeSpec lat = brick_wall(2, 3);
    ASSERT_EQ(lat.plaquettes.size(), 1u);
    SpinModel m = build_spin_hamiltonian(lat, {0.3, 0.7, 1.1});
    Eigen::MatrixXcd h = m.dense(), w = Eigen::MatrixXcd(m.plaquettes[0]);
    EXPECT_EQ(oracle::max_abs(h * w - w * h), 0.0);
    EXPECT_LT(oracle::max_abs(w * w - Eigen::MatrixXcd::Identity(64, 64)), 1e-15);
    EXPECT_LT(oracle::max_abs(w - w.adjoint()), 1e-15);
}

TEST(SpinHamiltonian, DecoupledZPairs) {
    for (auto [r, c] : {std::pair{2, 3}, {3, 3}, {2, 4}}) {
        LatticeSpec lat = brick_wall(r, c);
        SpinModel m = build_spin_hamiltonian(lat, {0, 0, 1});
        double e0 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m.dense(), Eigen::EigenvaluesOnly).eigenvalues()[0];
        EXPECT_NEAR(e0, -double(lat.z_links().size()), 1e-12);
        EXPECT_NEAR(quadratic_spectrum(build_jw_quadratic(lat, {0, 0, 1}, std::vector<int>(lat.z_links().size(), 1)))
                        .ground_energy,
                    -double(lat.z_links().size()), 1e-12);
    }
}

TEST(SpinHamiltonian, EigenvectorsHaveDefiniteFlux) {
    LatticeSpec lat = brick_wall(2, 5);
    SpinModel m = build_spin_hamiltonian(lat, {0.8, 1.0, 1.2});
    Eigen::MatrixXcd h = m.dense();
    Eigen::MatrixXcd h_mix = h;
    const double weights[] = {0.0123, 0.0311};
    for (std::size_t p = 0; p < m.plaquettes.size(); ++p) {
        h_mix += weights[p % 2] * Eigen::MatrixXcd(m.plaquettes[p]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_mix);
    for (Eigen::Index k = 0; k < es.eigenvectors().cols(); ++k) {
        Eigen::VectorXcd v = es.eigenvectors().col(k);
        double e = std::real(v.dot(h * v));
        EXPECT_LT((h * v - e * v).norm(), 1e-10);
        for (const auto &w : m.plaquettes) {
            EXPECT_NEAR(std::abs(std::real(v.dot(w * v))), 1.0, 1e-10);
        }
    }
}

TEST(JWQuadratic, AntisymmetricAndFlagFlip) {
    LatticeSpec lat = brick_wall(3, 4);
    HoneycombCouplings c{0.4, 0.9, 1.3};
    std::vector<int> f(lat.z_links().size(), 1);
    JWQuadraticForm a = build_jw_quadratic(lat, c, f);
    EXPECT_EQ((a.coupling + a.coupling.transpose()).cwiseAbs().maxCoeff(), 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        std::vector<int> g = f;
        g[k] = -1;
        JWQuadraticForm b = build_jw_quadratic(lat, c, g);
        Eigen::MatrixXd diff = a.coupling - b.coupling;
        int changed = 0;
        for (Eigen::Index r = 0; r < diff.rows(); ++r) {
            for (Eigen::Index s = r + 1; s < diff.cols(); ++s) {
                if (diff(r, s) != 0.0) {
                    ++changed;
                    EXPECT_EQ(b.coupling(r, s), -a.coupling(r, s));
                    EXPECT_EQ(std::abs(a.coupling(r, s)), c.Jz);
                }
            }
        }
        EXPECT_EQ(changed, 1);
    }
    EXPECT_THROW(build_jw_quadratic(lat, c, {1}), InvalidArgument);
    EXPECT_THROW(build_jw_quadratic(lat, {1, 1, 1, 0.1, 0.1, 0.1}, f), InvalidArgument);
}

TEST(JWQuadratic, EnergiesPaired) {
    LatticeSpec lat = brick_wall(2, 4);
    JWQuadraticForm q = build_jw_quadratic(lat, {1, 1, 1}, std::vector<int>(lat.z_links().size(), 1));
    Eigen::MatrixXcd ih = std::complex<double>(0, 2) * q.coupling.cast<std::complex<double>>();
    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(ih).eigenvalues();
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        EXPECT_NEAR(ev[k], -ev[ev.size() - 1 - k], 1e-12);
    }
    for (double e : quadratic_spectrum(q).energies) {
        EXPECT_GE(e, 0.0);
    }
}

TEST(JWQuadratic, MatchesVortexFreeED) {
    for (auto [r, c] : {std::pair{2, 3}, {2, 4}, {3, 3}, {2, 5}}) {
        LatticeSpec lat = brick_wall(r, c);
        for (HoneycombCouplings cp : {HoneycombCouplings{1, 1, 1}, HoneycombCouplings{0.5, 0.8, 1.3}}) {
            SpinModel m = build_spin_hamiltonian(lat, cp);
            double ed = vortex_free_ed(m.dense(), m.plaquettes);
            EXPECT_NEAR(vortex_free_jw(lat, cp), ed, 1e-8) << r << "x" << c;
            // all-plus flags against the penalty ED of the same alpha sector
            std::vector<int> f(lat.z_links().size(), 1);
            EXPECT_NEAR(quadratic_spectrum(build_jw_quadratic(lat, cp, f)).ground_energy,
                        sector_ground_energy_ed(lat, cp, f), 1e-8);
        }
    }
}

TEST(JWQuadratic, FlippedSectorsMatchED) {
    LatticeSpec lat = brick_wall(2, 4);
    HoneycombCouplings cp{0.7, 1.0, 0.9};
    const int m = static_cast<int>(lat.z_links().size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> f(m);
        for (int k = 0; k < m; ++k) {
            f[k] = (mask >> k) & 1 ? -1 : 1;
        }
        EXPECT_NEAR(quadratic_spectrum(build_jw_quadratic(lat, cp, f)).ground_energy,
                    sector_ground_energy_ed(lat, cp, f), 1e-8);
    }
}

TEST(EffectiveField, ZeroComponentGivesZero) {
    LatticeSpec lat = brick_wall(2, 3);
    EXPECT_EQ(effective_field_term(lat, {1, 1, 1, 0.1, 0.0, 0.2}).nonZeros(), 0);
}

TEST(EffectiveField, HermitianAndTimeReversalOdd) {
    LatticeSpec lat = brick_wall(2, 3);
    const int n = lat.n_sites();
    Eigen::MatrixXcd m(effective_field_term(lat, {1, 1, 1, 0.1, 0.2, 0.3}));
    EXPECT_GT(oracle::max_abs(m), 0.0);
    EXPECT_LT(oracle::max_abs(m - m.adjoint()), 1e-15);
    // oracle time reversal: (iY)^{(x)n} K
    std::vector<char> ys(n, 'Y');
    Eigen::MatrixXcd u = std::pow(std::complex<double>(0, 1), n) * oracle::pauli_string(ys);
    Eigen::MatrixXcd tr = u * m.conjugate() * u.adjoint();
    EXPECT_LT(oracle::max_abs(tr + m), 1e-15);
    EXPECT_LT(oracle::max_abs(time_reverse(m, n) + m), 1e-15);
    // the bare Hamiltonian is even
    Eigen::MatrixXcd h = build_spin_hamiltonian(lat, {1, 1, 1}).dense();
    EXPECT_LT(oracle::max_abs(time_reverse(h, n) - h), 1e-15);
}

TEST(EffectiveField, RequiresIsotropy) {
    EXPECT_THROW(effective_field_term(brick_wall(2, 3), {1, 2, 1, 0.1, 0.1, 0.1}), InvalidArgument);
}
