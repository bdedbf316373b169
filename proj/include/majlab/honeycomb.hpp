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

// Kitaev honeycomb model on an open brick-wall lattice: Bloch dispersion,
// phase classification, spin Hamiltonian with plaquette operators, and the
// Jordan-Wigner quadratic form of the vortex sectors.
//
// Lattice: rows x cols sites, site (r, c) -> r * cols + c. The horizontal
// link (r,c)-(r,c+1) is x for even r+c and y for odd r+c; the vertical z
// link (r,c)-(r+1,c) exists for even r+c. Black sites have even r+c.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "majlab/error.hpp"
#include "majlab/majorana_algebra.hpp"
#include "majlab/spin.hpp"

namespace majlab {

struct HoneycombCouplings {
    double Jx = 1.0, Jy = 1.0, Jz = 1.0;
    double hx = 0.0, hy = 0.0, hz = 0.0;

    bool has_field() const { return hx != 0.0 || hy != 0.0 || hz != 0.0; }
    bool isotropic() const { return Jx == Jy && Jy == Jz; }
    double J(char type) const { return type == 'x' ? Jx : type == 'y' ? Jy : Jz; }
};

struct SpectrumSample {
    double qx = 0.0, qy = 0.0;
    double eps = 0.0, delta = 0.0, delta_tilde = 0.0;
    double energy = 0.0;
};

enum class PhaseLabel { Ax, Ay, Az, B_gapless, boundary };

inline std::string to_string(PhaseLabel p) {
    switch (p) {
        case PhaseLabel::Ax:
            return "Ax";
        case PhaseLabel::Ay:
            return "Ay";
        case PhaseLabel::Az:
            return "Az";
        case PhaseLabel::B_gapless:
            return "B_gapless";
        default:
            return "boundary";
    }
}

namespace detail {

inline void check_couplings(const HoneycombCouplings &c) {
    require(c.Jx >= 0 && c.Jy >= 0 && c.Jz >= 0, "couplings must be nonnegative");
    require(std::isfinite(c.Jx + c.Jy + c.Jz + c.hx + c.hy + c.hz), "couplings must be finite");
}

}  // namespace detail

/// eps = 2Jz - 2Jx cos qx - 2Jy cos qy, delta = 2Jx sin qx + 2Jy sin qy and,
/// at the isotropic point J, delta_tilde = (4 hx hy hz / J^2)
/// (sin(qy - qx) + sin qx - sin qy).
inline SpectrumSample dispersion(const HoneycombCouplings &c, double qx, double qy) {
    detail::check_couplings(c);
    SpectrumSample s;
    s.qx = qx;
    s.qy = qy;
    s.eps = 2 * c.Jz - 2 * c.Jx * std::cos(qx) - 2 * c.Jy * std::cos(qy);
    s.delta = 2 * c.Jx * std::sin(qx) + 2 * c.Jy * std::sin(qy);
    if (c.has_field()) {
        if (!c.isotropic() || c.Jx <= 0) {
            throw InvalidArgument("perturbative formula out of domain: field needs Jx = Jy = Jz > 0");
        }
        double amp = 4 * c.hx * c.hy * c.hz / (c.Jx * c.Jx);
        s.delta_tilde = amp * (std::sin(qy - qx) + std::sin(qx) - std::sin(qy));
    }
    s.energy = std::sqrt(s.eps * s.eps + s.delta * s.delta + s.delta_tilde * s.delta_tilde);
    return s;
}

inline PhaseLabel classify_phase(double jx, double jy, double jz) {
    if (!(jx > 0 && jy > 0 && jz > 0) || !std::isfinite(jx + jy + jz)) {
        throw InvalidArgument("classify_phase needs positive couplings");
    }
    const double tol = 1e-12 * (jx + jy + jz);
    const std::array<double, 3> j = {jx, jy, jz};
    for (int a = 0; a < 3; ++a) {
        double rest = j[(a + 1) % 3] + j[(a + 2) % 3];
        if (j[a] > rest + tol) {
            return a == 0 ? PhaseLabel::Ax : a == 1 ? PhaseLabel::Ay : PhaseLabel::Az;
        }
    }
    for (int a = 0; a < 3; ++a) {
        if (std::abs(j[a] - j[(a + 1) % 3] - j[(a + 2) % 3]) <= tol) {
            return PhaseLabel::boundary;
        }
    }
    return PhaseLabel::B_gapless;
}

struct GapResult {
    double min_energy = std::numeric_limits<double>::infinity();
    double qx = 0.0, qy = 0.0;
};

/// Minimum of E_q over q_k = -pi + 2 pi k / grid_n. With refine_levels > 0
/// the minimum is then polished by repeated grids shrinking around the
/// current best point.
inline GapResult bz_min_gap(const HoneycombCouplings &c, int grid_n, int refine_levels = 0) {
    detail::require(grid_n >= 3, "grid_n must be at least 3");
    detail::require(refine_levels >= 0, "refine_levels must be nonnegative");
    GapResult best;
    const double step = 2 * M_PI / grid_n;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            double qx = -M_PI + step * i, qy = -M_PI + step * j;
            double e = dispersion(c, qx, qy).energy;
            if (e < best.min_energy) {
                best = {e, qx, qy};
            }
        }
    }
    double half = step;
    constexpr int kSub = 8;
    for (int level = 0; level < refine_levels; ++level) {
        const GapResult centre = best;
        for (int i = -kSub; i <= kSub; ++i) {
            for (int j = -kSub; j <= kSub; ++j) {
                double qx = centre.qx + half * i / kSub, qy = centre.qy + half * j / kSub;
                double e = dispersion(c, qx, qy).energy;
                if (e < best.min_energy) {
                    best = {e, qx, qy};
                }
            }
        }
        half *= 0.25;
    }
    return best;
}

/// Gap below which a grid minimum counts as gapless: max(1e-3, C / grid_n),
/// C = 4 pi (Jx + Jy) bounding E at the nearest grid point to a zero.
inline double gapless_threshold(const HoneycombCouplings &c, int grid_n) {
    return std::max(1e-3, 4 * M_PI * (c.Jx + c.Jy) / grid_n);
}

inline bool numerically_gapless(const HoneycombCouplings &c, int grid_n, int refine_levels = 12) {
    return bz_min_gap(c, grid_n, refine_levels).min_energy < gapless_threshold(c, grid_n);
}

// ---------------------------------------------------------------------------
// Lattice.

struct HoneycombLink {
    int a = 0, b = 0;  // site indices; for z links a is the upper site
    char type = 'x';
};

struct Plaquette {
    std::vector<int> sites;    // six sites
    std::vector<char> paulis;  // external-link type at each site
    std::vector<int> z_links;  // indices into LatticeSpec::z_links()
};

struct LatticeSpec {
    int rows = 2, cols = 3;
    std::vector<HoneycombLink> links;
    std::vector<Plaquette> plaquettes;

    int n_sites() const { return rows * cols; }
    int site(int r, int c) const { return r * cols + c; }
    bool black(int s) const { return ((s / cols) + (s % cols)) % 2 == 0; }

    std::vector<int> z_links() const {
        std::vector<int> out;
        for (int k = 0; k < static_cast<int>(links.size()); ++k) {
            if (links[k].type == 'z') {
                out.push_back(k);
            }
        }
        return out;
    }

    /// Link of `type` at site s, if present.
    std::optional<HoneycombLink> link_at(int s, char type) const {
        for (const auto &l : links) {
            if (l.type == type && (l.a == s || l.b == s)) {
                return l;
            }
        }
        return std::nullopt;
    }
};

inline LatticeSpec brick_wall(int rows, int cols) {
    detail::require(rows >= 1 && cols >= 2, "brick wall needs rows >= 1 and cols >= 2");
    detail::check_spins(rows * cols);
    LatticeSpec lat;
    lat.rows = rows;
    lat.cols = cols;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c + 1 < cols; ++c) {
            lat.links.push_back({lat.site(r, c), lat.site(r, c + 1), (r + c) % 2 == 0 ? 'x' : 'y'});
        }
    }
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if ((r + c) % 2 == 0) {
                lat.links.push_back({lat.site(r, c), lat.site(r + 1, c), 'z'});
            }
        }
    }
    const std::vector<int> zl = lat.z_links();
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c + 2 < cols; ++c) {
            if ((r + c) % 2 != 0) {
                continue;
            }
            Plaquette p;
            for (int rr : {r, r + 1}) {
                for (int cc = c; cc <= c + 2; ++cc) {
                    p.sites.push_back(lat.site(rr, cc));
                }
            }
            for (int s : p.sites) {
                // the two plaquette edges at s: horizontal inside [c, c+2], vertical at c or c+2
                int sc = s % cols, sr = s / cols;
                std::string inner;
                if (sc > c) {
                    inner += (sr + sc - 1) % 2 == 0 ? 'x' : 'y';
                }
                if (sc < c + 2) {
                    inner += (sr + sc) % 2 == 0 ? 'x' : 'y';
                }
                if (sc == c || sc == c + 2) {
                    inner += 'z';
                }
                char ext = 'x';
                for (char t : {'x', 'y', 'z'}) {
                    if (inner.find(t) == std::string::npos) {
                        ext = t;
                    }
                }
                p.paulis.push_back(ext);
            }
            for (int k = 0; k < static_cast<int>(zl.size()); ++k) {
                const auto &l = lat.links[zl[k]];
                if (l.a == lat.site(r, c) || l.a == lat.site(r, c + 2)) {
                    p.z_links.push_back(k);
                }
            }
            lat.plaquettes.push_back(p);
        }
    }
    return lat;
}

inline PauliString link_operator(const LatticeSpec &lat, const HoneycombLink &l) {
    char p = static_cast<char>(std::toupper(l.type));
    PauliString s(lat.n_sites());
    s.letters[l.a] = p;
    s.letters[l.b] = p;
    return s;
}

inline PauliString plaquette_operator(const LatticeSpec &lat, const Plaquette &p) {
    PauliString s(lat.n_sites());
    for (std::size_t k = 0; k < p.sites.size(); ++k) {
        s.letters[p.sites[k]] = static_cast<char>(std::toupper(p.paulis[k]));
    }
    return s;
}

struct SpinModel {
    int n_spins = 0;
    SparseMatrixC hamiltonian;
    std::vector<SparseMatrixC> plaquettes;

    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(hamiltonian); }
};

/// H = -sum_links J_type s^type s^type - sum_s (hx X + hy Y + hz Z).
inline SpinModel build_spin_hamiltonian(const LatticeSpec &lat, const HoneycombCouplings &c) {
    detail::check_couplings(c);
    const int n = lat.n_sites();
    detail::check_spins(n);
    std::vector<PauliString> terms;
    for (const auto &l : lat.links) {
        PauliString t = link_operator(lat, l);
        t.coeff = -c.J(l.type);
        terms.push_back(t);
    }
    for (int s = 0; s < n; ++s) {
        for (auto [l, h] : {std::pair{'X', c.hx}, std::pair{'Y', c.hy}, std::pair{'Z', c.hz}}) {
            if (h != 0.0) {
                terms.push_back(PauliString::single(n, s, l, -h));
            }
        }
    }
    SpinModel m;
    m.n_spins = n;
    m.hamiltonian = pauli_sum_matrix(n, terms);
    for (const auto &p : lat.plaquettes) {
        m.plaquettes.push_back(pauli_matrix(plaquette_operator(lat, p)));
    }
    return m;
}

/// Three-spin terms s^a_j s^g_k s^b_l for every site k with neighbours j
/// (via link a) and l (via link b), g the remaining type, summed with weight
/// -(hx hy hz / J^2). The prefactor of the perturbative term is taken as 1.
inline SparseMatrixC effective_field_term(const LatticeSpec &lat, const HoneycombCouplings &c) {
    detail::check_couplings(c);
    const int n = lat.n_sites();
    detail::check_spins(n);
    const double h3 = c.hx * c.hy * c.hz;
    SparseMatrixC zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    if (h3 == 0.0) {
        return zero;
    }
    if (!c.isotropic() || c.Jx <= 0) {
        throw InvalidArgument("perturbative formula out of domain: field needs Jx = Jy = Jz > 0");
    }
    const double w = -h3 / (c.Jx * c.Jx);
    std::vector<PauliString> terms;
    const std::array<char, 3> types = {'x', 'y', 'z'};
    for (int k = 0; k < n; ++k) {
        for (int u = 0; u < 3; ++u) {
            for (int v = u + 1; v < 3; ++v) {
                auto la = lat.link_at(k, types[u]), lb = lat.link_at(k, types[v]);
                if (!la || !lb) {
                    continue;
                }
                int j = la->a == k ? la->b : la->a;
                int l = lb->a == k ? lb->b : lb->a;
                char g = types[3 - u - v];
                PauliString t(n);
                t.letters[j] = static_cast<char>(std::toupper(types[u]));
                t.letters[k] = static_cast<char>(std::toupper(g));
                t.letters[l] = static_cast<char>(std::toupper(types[v]));
                t.coeff = w;
                terms.push_back(t);
            }
        }
    }
    return terms.empty() ? zero : pauli_sum_matrix(n, terms);
}

/// Time reversal U K with U = (i Y)^{(x) n}; returns U conj(M) U^dagger.
inline Eigen::MatrixXcd time_reverse(const Eigen::MatrixXcd &m, int n) {
    PauliString u(n);
    for (int s = 0; s < n; ++s) {
        u.letters[s] = 'Y';
    }
    u.coeff = std::pow(std::complex<double>(0, 1), n);
    Eigen::MatrixXcd um = Eigen::MatrixXcd(pauli_matrix(u));
    return um * m.conjugate() * um.adjoint();
}

// ---------------------------------------------------------------------------
// Jordan-Wigner quadratic form.

/// H = i sum_{u<v} T(u,v) A_u A_v over the per-site A Majoranas, in the
/// sector fixed by the z-link flags alpha_r = i B_upper B_lower.
struct JWQuadraticForm {
    Eigen::MatrixXd coupling;   // T, antisymmetric, indexed by site
    std::vector<int> alpha;     // one flag per z link
    std::vector<int> a_mode;    // Majorana index (1-based) used as A for each site
    std::vector<int> b_mode;    // the partner Majorana
};

namespace detail {

struct Bilinear {
    int u = 0, v = 0;  // Majorana indices, u < v
    double t = 0.0;    // term = i t g_u g_v
};

inline Bilinear as_bilinear(double coeff, const MajoranaMonomial &m) {
    if (m.degree() != 2 || m.phase % 2 == 0) {
        throw NumericalFailure("internal: term is not a Hermitian Majorana bilinear");
    }
    return {m.modes[0], m.modes[1], m.phase == 1 ? coeff : -coeff};
}

}  // namespace detail

/// The z-link bilinear i B_a B_b for every z link, with (A, B) per site.
struct JWGauge {
    std::vector<int> a_mode, b_mode;
    std::vector<MajoranaMonomial> alpha;  // per z link
};

inline JWGauge jw_gauge(const LatticeSpec &lat) {
    const int n = lat.n_sites();
    JWGauge g;
    g.a_mode.assign(n, 0);
    for (const auto &l : lat.links) {
        if (l.type == 'z') {
            continue;
        }
        JwMonomial jm = pauli_to_majorana(link_operator(lat, l));
        if (jm.monomial.degree() != 2) {
            throw NumericalFailure("internal: horizontal link is not quadratic");
        }
        for (int k : jm.monomial.modes) {
            int s = (k - 1) / 2;
            if (g.a_mode[s] != 0 && g.a_mode[s] != k) {
                throw NumericalFailure("internal: inconsistent A Majorana at a site");
            }
            g.a_mode[s] = k;
        }
    }
    g.b_mode.resize(n);
    for (int s = 0; s < n; ++s) {
        if (g.a_mode[s] == 0) {
            throw NumericalFailure("internal: site without horizontal link");
        }
        g.b_mode[s] = g.a_mode[s] % 2 == 1 ? g.a_mode[s] + 1 : g.a_mode[s] - 1;
    }
    for (int k : lat.z_links()) {
        const auto &l = lat.links[k];
        g.alpha.push_back(MajoranaMonomial::product(1, {g.b_mode[l.a], g.b_mode[l.b]}));
    }
    return g;
}

inline JWQuadraticForm build_jw_quadratic(const LatticeSpec &lat, const HoneycombCouplings &c,
                                          const std::vector<int> &alpha_flags) {
    detail::check_couplings(c);
    if (c.has_field()) {
        throw InvalidArgument("the quadratic form needs zero field");
    }
    const std::vector<int> zl = lat.z_links();
    if (alpha_flags.size() != zl.size()) {
        throw InvalidArgument("mismatched flag count: got " + std::to_string(alpha_flags.size()) + ", lattice has " +
                              std::to_string(zl.size()) + " z links");
    }
    for (int f : alpha_flags) {
        detail::require(f == 1 || f == -1, "alpha flags must be +1 or -1");
    }
    const int n = lat.n_sites();
    JWGauge g = jw_gauge(lat);
    JWQuadraticForm q;
    q.coupling = Eigen::MatrixXd::Zero(n, n);
    q.alpha = alpha_flags;
    q.a_mode = g.a_mode;
    q.b_mode = g.b_mode;
    auto add = [&](const detail::Bilinear &b) {
        int su = (b.u - 1) / 2, sv = (b.v - 1) / 2;
        if (g.a_mode[su] != b.u || g.a_mode[sv] != b.v) {
            throw NumericalFailure("internal: bilinear outside the A Majoranas");
        }
        q.coupling(su, sv) += b.t;
        q.coupling(sv, su) -= b.t;
    };
    int zk = 0;
    for (const auto &l : lat.links) {
        JwMonomial jm = pauli_to_majorana(link_operator(lat, l));
        double coeff = -c.J(l.type) * jm.sign;
        if (l.type != 'z') {
            add(detail::as_bilinear(coeff, jm.monomial));
            continue;
        }
        // M = (M alpha) alpha, and alpha -> flag in the sector
        add(detail::as_bilinear(coeff * alpha_flags[zk], jm.monomial * g.alpha[zk]));
        ++zk;
    }
    return q;
}

struct QuadraticSpectrum {
    std::vector<double> energies;  // nonnegative, ascending
    double ground_energy = 0.0;
};

/// With h = 2T the Hamiltonian is (i/4) sum h_uv A_u A_v; the positive
/// eigenvalues e_k of i h are the mode energies and E0 = -sum e_k / 2.
inline QuadraticSpectrum quadratic_spectrum(const JWQuadraticForm &form) {
    const Eigen::Index n = form.coupling.rows();
    Eigen::MatrixXcd ih = std::complex<double>(0, 2) * form.coupling.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ih, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = es.eigenvalues();
    QuadraticSpectrum out;
    for (Eigen::Index k = n - n / 2; k < n; ++k) {
        out.energies.push_back(std::max(0.0, ev[k]));
    }
    std::sort(out.energies.begin(), out.energies.end());
    for (double e : out.energies) {
        out.ground_energy -= 0.5 * e;
    }
    return out;
}

/// alpha_r as spin operators.
inline std::vector<SparseMatrixC> alpha_operators(const LatticeSpec &lat) {
    const int n = lat.n_sites();
    JWGauge g = jw_gauge(lat);
    std::vector<SparseMatrixC> out;
    for (const auto &a : g.alpha) {
        PauliString p = jw_majorana(n, a.modes[0]) * jw_majorana(n, a.modes[1]);
        p.coeff *= std::pow(std::complex<double>(0, 1), a.phase);
        out.push_back(pauli_matrix(p));
    }
    return out;
}

/// Sign s_p with W_p = s_p * prod_{z links r of p} alpha_r, derived by
/// rewriting both sides as Majorana monomials.
inline int plaquette_alpha_sign(const LatticeSpec &lat, const Plaquette &p) {
    JWGauge g = jw_gauge(lat);
    JwMonomial w = pauli_to_majorana(plaquette_operator(lat, p));
    MajoranaMonomial prod = MajoranaMonomial::identity();
    for (int k : p.z_links) {
        prod = prod * g.alpha[k];
    }
    // W = sign * w.monomial; want W * prod^{-1} = s_p, alpha^{-1} = alpha
    MajoranaMonomial r = w.monomial * prod;
    if (!r.modes.empty() || r.phase % 2 != 0) {
        throw NumericalFailure("internal: plaquette is not a product of z-link flags");
    }
    return (r.phase == 0 ? 1 : -1) * (w.sign > 0 ? 1 : -1);
}

/// Ground energy of the spin Hamiltonian restricted to the sector alpha =
/// flags, by full diagonalization of H - lambda sum_r flag_r alpha_r.
inline double sector_ground_energy_ed(const LatticeSpec &lat, const HoneycombCouplings &c,
                                      const std::vector<int> &alpha_flags) {
    SpinModel m = build_spin_hamiltonian(lat, c);
    std::vector<SparseMatrixC> al = alpha_operators(lat);
    detail::require(al.size() == alpha_flags.size(), "mismatched flag count");
    double norm_bound = 0.0;
    for (const auto &l : lat.links) {
        norm_bound += c.J(l.type);
    }
    norm_bound += lat.n_sites() * (std::abs(c.hx) + std::abs(c.hy) + std::abs(c.hz));
    const double lambda = 2 * norm_bound + 1;
    SparseMatrixC h = m.hamiltonian;
    for (std::size_t r = 0; r < al.size(); ++r) {
        h -= std::complex<double>(lambda * alpha_flags[r]) * al[r];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(h), Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0] + lambda * static_cast<double>(al.size());
}

}  // namespace majlab
