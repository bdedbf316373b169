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

// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "majlab/braid_relations.hpp"
#include "majlab/encoding.hpp"
#include "majlab/honeycomb.hpp"
#include "majlab/protocols.hpp"
#include "majlab/toric_code.hpp"
#include "oracles.hpp"

using namespace majlab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (pass) {
                detail << "first failure: " << what << "; ";
            }
            pass = false;
        }
    }
};

oracle::Mat monomial_matrix(int nf, const MajoranaMonomial &m) {
    static const oracle::cplx kPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    oracle::Mat out = oracle::Mat::Identity(1 << nf, 1 << nf);
    for (int k : m.modes) {
        out = out * oracle::gamma(nf, k);
    }
    return kPow[mod4(m.phase)] * out;
}

// --- 1 -------------------------------------------------------------------

void braid_algebra(Outcome &o) {
    double worst = 0.0;
    for (int n = 4; n <= 6; ++n) {
        RelationReport rep = verify_braid_relations(n);
        o.require(rep.all_pass(), "relations n=" + std::to_string(n));
        for (const auto &c : rep.checks) {
            worst = std::max(worst, c.error);
        }
        const int nf = (n + 1) / 2;
        for (int i = 2; i < n; ++i) {
            BraidGenerator a = BraidGenerator::cw(i - 1, i), b = BraidGenerator::cw(i, i + 1);
            MajoranaMonomial want = MajoranaMonomial::product(0, {i - 1, i + 1});
            auto sym = braid_commutator(a, b);
            o.require(sym && *sym == want, "symbolic commutator i=" + std::to_string(i));
            oracle::Mat A = oracle::braid(nf, i - 1, i), B = oracle::braid(nf, i, i + 1);
            double err = oracle::max_abs(A * B - B * A - monomial_matrix(nf, want));
            worst = std::max(worst, err);
            o.require(err < 1e-12, "numeric commutator i=" + std::to_string(i));
            // library matrices agree with the independent construction
            double lib = oracle::max_abs(braid_matrix(nf, a) - A);
            worst = std::max(worst, lib);
            o.require(lib < 1e-12, "braid_matrix i=" + std::to_string(i));
        }
    }
    o.detail << "max error " << worst;
}

// --- 2 -------------------------------------------------------------------

void exchange_action(Outcome &o) {
    double worst = 0.0;
    for (int n = 4; n <= 6; ++n) {
        const int nf = (n + 1) / 2;
        const oracle::Mat id = oracle::Mat::Identity(1 << nf, 1 << nf);
        for (int i = 1; i < n; ++i) {
            BraidGenerator g = BraidGenerator::cw(i, i + 1);
            BraidWord one{{g}};
            BraidWord four{std::vector<BraidGenerator>(4, g)};
            o.require(braid_conjugate(one, MajoranaMonomial::mode(i), n) == MajoranaMonomial::mode(i + 1),
                      "gamma_i image");
            o.require(braid_conjugate(one, MajoranaMonomial::mode(i + 1), n) == MajoranaMonomial::mode(i).negated(),
                      "gamma_i+1 image");
            for (int k = 1; k <= n; ++k) {
                o.require(braid_conjugate(four, MajoranaMonomial::mode(k), n) == MajoranaMonomial::mode(k),
                          "fourth power fixes gamma_" + std::to_string(k));
                if (k != i && k != i + 1) {
                    o.require(braid_conjugate(one, MajoranaMonomial::mode(k), n) == MajoranaMonomial::mode(k),
                              "spectator fixed");
                }
            }
            oracle::Mat b = braid_matrix(nf, g);
            oracle::Mat gi = oracle::gamma(nf, i), gj = oracle::gamma(nf, i + 1);
            double e_img = std::max(oracle::max_abs(b * gi * b.adjoint() - gj), oracle::max_abs(b * gj * b.adjoint() + gi));
            oracle::Mat b2 = b * b, b4 = b2 * b2;
            double e2 = oracle::max_abs(b2 + gi * gj);
            double e4 = oracle::max_abs(b4 + id);
            double e8 = oracle::max_abs(b4 * b4 - id);
            for (double e : {e_img, e2, e4, e8}) {
                worst = std::max(worst, e);
            }
            o.require(e_img < 1e-12 && e2 < 1e-12 && e4 < 1e-12 && e8 < 1e-12, "matrix identities i=" + std::to_string(i));
        }
    }
    o.detail << "max error " << worst;
}

// --- 3 -------------------------------------------------------------------

std::string phase_oracle(double x, double y, double z) {
    if (x > y + z) return "Ax";
    if (y > z + x) return "Ay";
    if (z > x + y) return "Az";
    if (x == y + z || y == z + x || z == x + y) return "boundary";
    return "B_gapless";
}

void phase_diagram(Outcome &o) {
    std::mt19937_64 rng(20261014);
    std::uniform_real_distribution<double> j(1e-3, 2.0);
    int agree = 0;
    const int n = 10000;
    for (int t = 0; t < n; ++t) {
        double x = j(rng), y = j(rng), z = j(rng);
        agree += to_string(classify_phase(x, y, z)) == phase_oracle(x, y, z);
    }
    o.require(agree == n, "classification agreement");
    double iso = bz_min_gap({1, 1, 1}, 60).min_energy;
    double az = bz_min_gap({0.1, 0.1, 1}, 60).min_energy;
    o.require(iso < 1e-6, "isotropic gap");
    o.require(az > 0.1, "A_z gap");
    o.detail << agree << "/" << n << " agree, isotropic gap " << iso << ", gap(0.1,0.1,1) " << az;
}

// --- 4 -------------------------------------------------------------------

void field_gap(Outcome &o) {
    double worst = 0.0;
    for (double t : {0.02, 0.05, 0.1}) {
        double want = 2 * std::sqrt(3.0) * t * t * t;
        double got = bz_min_gap({1, 1, 1, t, t, t}, 60, 12).min_energy;
        double rel = std::abs(got - want) / want;
        worst = std::max(worst, rel);
        o.require(rel < 0.02, "t=" + std::to_string(t));
    }
    o.detail << "max relative deviation " << worst;
}

// --- 5 -------------------------------------------------------------------

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

void honeycomb_ed(Outcome &o) {
    double worst_comm = 0.0, worst_e = 0.0;
    int lattices = 0;
    for (auto [r, c] : {std::pair{2, 3}, {2, 4}, {3, 3}, {2, 5}}) {
        LatticeSpec lat = brick_wall(r, c);
        for (HoneycombCouplings cp : {HoneycombCouplings{1, 1, 1}, HoneycombCouplings{0.5, 0.8, 1.3}}) {
            SpinModel m = build_spin_hamiltonian(lat, cp);
            Eigen::MatrixXcd h = m.dense();
            for (const auto &wp : m.plaquettes) {
                Eigen::MatrixXcd w(wp);
                worst_comm = std::max(worst_comm, oracle::max_abs(h * w - w * h));
            }
            worst_e = std::max(worst_e, std::abs(vortex_free_jw(lat, cp) - vortex_free_ed(h, m.plaquettes)));
        }
        ++lattices;
    }
    o.require(worst_comm < 1e-12, "plaquette commutator");
    o.require(worst_e < 1e-8, "JW vs ED");
    o.detail << lattices << " lattices, max |[H,W_p]| " << worst_comm << ", max |E_jw - E_ed| " << worst_e;
}

// --- 6 -------------------------------------------------------------------

void toric_code(Outcome &o) {
    SquareLattice lat = make_torus(2, 2);
    double worst = 0.0;
    for (double j : {1.0, j_eff(0.3, 0.4, 1.0)}) {
        ToricModel m = build_toric_hamiltonian(lat, j);
        Eigen::VectorXd ev =
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.hamiltonian, Eigen::EigenvaluesOnly).eigenvalues();
        for (int k = 1; k < 4; ++k) {
            worst = std::max(worst, std::abs(ev[k] - ev[0]));
        }
        worst = std::max(worst, std::abs(ev[4] - ev[0] - 4 * j));
    }
    o.require(worst < 1e-10, "degeneracy and gap");
    cplx p11 = braiding_phase(lat, 1, 1).phase, p22 = braiding_phase(lat, 2, 2).phase;
    o.require(std::abs(p11 + 1.0) < 1e-10, "braiding (1,1)");
    o.require(std::abs(p22 - 1.0) < 1e-10, "braiding (2,2)");
    BraidingResult a = braiding_phase(lat, 1, 1, std::vector<int>{0});
    BraidingResult b = braiding_phase(lat, 1, 1, std::vector<int>{0, 1, 2});
    o.require(a.loop != b.loop, "distinct loops");
    o.require(std::abs(a.phase - b.phase) < 1e-10, "path independence");
    o.detail << "spectrum error " << worst << ", phase(1,1) " << p11.real() << ", phase(2,2) " << p22.real()
             << ", loops of length " << a.loop.size() << " and " << b.loop.size();
}

// --- 7 -------------------------------------------------------------------

void protocols(Outcome &o) {
    RandomSource rng(7);
    const EncodedRegister a4 = prepare_a4({AncillaKind::a4, 0.0, NoiseModel::none}).members[0].second;
    double worst = 1.0;
    long branches = 0;
    for (int t = 0; t < 100; ++t) {
        Eigen::VectorXcd v1 = random_logical_vector(1, rng);
        Eigen::VectorXcd t_out = ideal_t_gate() * v1;
        double total = 0.0;
        enumerate_branches([&](ForcedOutcomes &src) {
            auto [out, trace] = pi8_gate(encode_state(1, v1), a4, QuadMeasurer{}, src);
            worst = std::min(worst, phase_insensitive_overlap(decode(out), t_out));
            total += trace.branch_probability();
            ++branches;
        });
        o.require(std::abs(total - 1.0) < 1e-9, "pi8 branch weights");
        Eigen::VectorXcd v2 = random_logical_vector(2, rng);
        Eigen::VectorXcd cz_out = ideal_cz_gate() * v2;
        total = 0.0;
        enumerate_branches([&](ForcedOutcomes &src) {
            auto [out, trace] = controlled_phase(encode_state(2, v2), QuadMeasurer{}, src);
            worst = std::min(worst, phase_insensitive_overlap(decode(out), cz_out));
            total += trace.branch_probability();
            ++branches;
        });
        o.require(std::abs(total - 1.0) < 1e-9, "cz branch weights");
    }
    o.require(worst > 1 - 1e-9, "branch overlap");

    NoisyState a4s = prepare_a4({AncillaKind::a4, 0.0, NoiseModel::none});
    RandomSource trials(77);
    const int n = 10000;
    int plus = 0, seen = 0;
    for (int t = 0; t < n; ++t) {
        auto [out, trace] = pi8_gate(encode_state(1, random_logical_vector(1, trials)), a4s, trials);
        for (const auto &[label, value] : trace.outcomes) {
            if (label == "ZZ") {
                plus += value > 0;
                ++seen;
                break;
            }
        }
    }
    double freq = double(plus) / n;
    o.require(seen == n, "ZZ recorded");
    o.require(std::abs(freq - 0.5) <= 0.02, "ZZ frequency");
    o.detail << branches << " branches, min overlap " << worst << ", P(ZZ=+1) " << freq;
}

// --- 8 -------------------------------------------------------------------

void noise(Outcome &o) {
    const std::vector<double> eps = {0.0, 0.05, 0.1, 0.14};
    std::ostringstream means;
    for (GateProtocol p : {GateProtocol::pi8, GateProtocol::cz}) {
        for (NoiseModel m : {NoiseModel::dephase_to_orthogonal, NoiseModel::depolarize}) {
            RandomSource rng(8);
            auto rows = gate_fidelity_sweep(p, eps, 100, m, rng);
            for (std::size_t k = 1; k < rows.size(); ++k) {
                double sigma = std::hypot(rows[k].stderr_, rows[k - 1].stderr_);
                o.require(rows[k].mean <= rows[k - 1].mean + 3 * sigma, "monotone sweep");
            }
            means << rows.back().mean << " ";
        }
    }
    Eigen::VectorXcd plus = (Eigen::VectorXcd(2) << 1, 1).finished() / std::sqrt(2.0);
    RandomSource rng(88);
    auto rows = gate_fidelity_sweep(GateProtocol::pi8, eps, 20, NoiseModel::dephase_to_orthogonal, rng, plus);
    double worst = 0.0;
    for (const auto &r : rows) {
        worst = std::max(worst, std::abs(r.mean - (1 - r.epsilon)));
        worst = std::max(worst, std::abs(r.min - (1 - r.epsilon)));
    }
    o.require(worst < 1e-10, "dephased |+> equals 1 - eps");
    o.detail << "F(0.14) = " << means.str() << "| max |F - (1-eps)| " << worst;
}

// --- 9 -------------------------------------------------------------------

void clifford_witness(Outcome &o) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> len(0, 20), quad(0, 1), pos(1, 4), bit(0, 1);
    int max_rank = 0;
    for (int t = 0; t < 1000; ++t) {
        BraidWord w;
        int L = len(rng);
        while (static_cast<int>(w.size()) < L) {
            int base = 4 * quad(rng);
            int a = pos(rng), b = pos(rng);
            if (a == b) {
                continue;
            }
            w.generators.emplace_back(base + std::min(a, b), base + std::max(a, b),
                                      bit(rng) ? Orientation::clockwise : Orientation::anticlockwise);
        }
        EncodedRegister r = apply_logical(encode_basis({bit(rng), bit(rng)}), w);
        max_rank = std::max(max_rank, schmidt_rank_2q(decode(r), 1e-8));
    }
    o.require(max_rank == 1, "braid-only rank");
    RandomSource prng(99);
    auto [cz, trace] = controlled_phase(encode_state(2, Eigen::VectorXcd::Ones(4) / 2.0), prng);
    int rank = schmidt_rank_2q(decode(cz), 1e-8);
    o.require(rank == 2, "controlled_phase rank");
    o.detail << "max braid-only rank " << max_rank << ", CZ|++> rank " << rank;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<void(Outcome &)> run;
    };
    const Criterion criteria[] = {
        {"1 braid algebra", braid_algebra},     {"2 exchange action", exchange_action},
        {"3 phase diagram", phase_diagram},     {"4 field-induced gap", field_gap},
        {"5 honeycomb ED", honeycomb_ed},       {"6 toric code", toric_code},
        {"7 protocols", protocols},             {"8 noise", noise},
        {"9 Clifford witness", clifford_witness},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.str().c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
