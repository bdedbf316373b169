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

// Toric code on an Lx x Ly torus with spins on edges, as dense state
// vectors. Edge h(x,y) joins vertex (x,y) to (x+1,y); edge v(x,y) joins
// (x,y) to (x,y+1). Plaquette (x,y) has corners (x,y) and (x+1,y+1).
//
//   A_s = prod_{star(s)} X,   B_p = prod_{boundary(p)} Z,
//   H = -J_eff (sum A_s + sum B_p).
//
// Electric charges (A_s = -1) sit at ends of Z strings; magnetic vortices
// (B_p = -1) at ends of X strings on the dual lattice.

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "majlab/error.hpp"

namespace majlab {

inline constexpr int kMaxToricSpins = 14;

struct SquareLattice {
    int Lx = 2, Ly = 2;

    int n_edges() const { return 2 * Lx * Ly; }
    int n_vertices() const { return Lx * Ly; }
    int n_plaquettes() const { return Lx * Ly; }

    int wrap_x(int x) const { return ((x % Lx) + Lx) % Lx; }
    int wrap_y(int y) const { return ((y % Ly) + Ly) % Ly; }
    int h(int x, int y) const { return wrap_y(y) * Lx + wrap_x(x); }
    int v(int x, int y) const { return Lx * Ly + wrap_y(y) * Lx + wrap_x(x); }
    int vertex(int x, int y) const { return wrap_y(y) * Lx + wrap_x(x); }
    int plaquette(int x, int y) const { return wrap_y(y) * Lx + wrap_x(x); }

    std::vector<int> star(int s) const {
        int x = s % Lx, y = s / Lx;
        return {h(x, y), h(x - 1, y), v(x, y), v(x, y - 1)};
    }

    std::vector<int> boundary(int p) const {
        int x = p % Lx, y = p / Lx;
        return {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)};
    }

    /// Endpoints (vertices) of an edge.
    std::pair<int, int> ends(int e) const {
        if (e < Lx * Ly) {
            int x = e % Lx, y = e / Lx;
            return {vertex(x, y), vertex(x + 1, y)};
        }
        int k = e - Lx * Ly, x = k % Lx, y = k / Lx;
        return {vertex(x, y), vertex(x, y + 1)};
    }

    /// The two plaquettes sharing an edge.
    std::pair<int, int> faces(int e) const {
        if (e < Lx * Ly) {
            int x = e % Lx, y = e / Lx;
            return {plaquette(x, y), plaquette(x, y - 1)};
        }
        int k = e - Lx * Ly, x = k % Lx, y = k / Lx;
        return {plaquette(x, y), plaquette(x - 1, y)};
    }
};

inline SquareLattice make_torus(int lx, int ly) {
    detail::require(lx >= 2 && ly >= 2, "torus needs Lx, Ly >= 2");
    if (2 * lx * ly > kMaxToricSpins) {
        throw InvalidArgument("too large: " + std::to_string(2 * lx * ly) + " spins exceeds cap of " +
                              std::to_string(kMaxToricSpins));
    }
    return {lx, ly};
}

inline std::uint64_t edge_mask(const std::vector<int> &edges) {
    std::uint64_t m = 0;
    for (int e : edges) {
        m ^= std::uint64_t{1} << e;
    }
    return m;
}

/// J_eff = Jx^2 Jy^2 / (16 Jz^3).
inline double j_eff(double jx, double jy, double jz) {
    if (!(jz > 0) || !std::isfinite(jx + jy + jz)) {
        throw InvalidArgument("j_eff needs Jz > 0");
    }
    return jx * jx * jy * jy / (16 * jz * jz * jz);
}

using ToricState = Eigen::VectorXcd;

inline ToricState apply_x(const ToricState &psi, std::uint64_t mask) {
    ToricState out(psi.size());
    for (Eigen::Index b = 0; b < psi.size(); ++b) {
        out[static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ mask)] = psi[b];
    }
    return out;
}

inline ToricState apply_z(const ToricState &psi, std::uint64_t mask) {
    ToricState out = psi;
    for (Eigen::Index b = 0; b < psi.size(); ++b) {
        if (__builtin_popcountll(static_cast<std::uint64_t>(b) & mask) & 1) {
            out[b] = -out[b];
        }
    }
    return out;
}

struct ToricModel {
    SquareLattice lattice;
    double j_eff = 1.0;
    std::vector<std::uint64_t> star_masks;
    std::vector<std::uint64_t> plaquette_masks;
    Eigen::MatrixXd hamiltonian;

    double star_value(const ToricState &psi, int s) const { return std::real(psi.dot(apply_x(psi, star_masks[s]))); }
    double plaquette_value(const ToricState &psi, int p) const {
        return std::real(psi.dot(apply_z(psi, plaquette_masks[p])));
    }
    double energy(const ToricState &psi) const {
        double e = 0.0;
        for (std::size_t s = 0; s < star_masks.size(); ++s) {
            e -= j_eff * star_value(psi, static_cast<int>(s));
        }
        for (std::size_t p = 0; p < plaquette_masks.size(); ++p) {
            e -= j_eff * plaquette_value(psi, static_cast<int>(p));
        }
        return e;
    }
};

/// Stabilizer masks, plus the dense Hamiltonian when `dense` is set.
inline ToricModel build_toric_hamiltonian(const SquareLattice &lat, double jeff, bool dense = true) {
    make_torus(lat.Lx, lat.Ly);
    ToricModel m;
    m.lattice = lat;
    m.j_eff = jeff;
    for (int s = 0; s < lat.n_vertices(); ++s) {
        m.star_masks.push_back(edge_mask(lat.star(s)));
    }
    for (int p = 0; p < lat.n_plaquettes(); ++p) {
        m.plaquette_masks.push_back(edge_mask(lat.boundary(p)));
    }
    if (dense) {
        const Eigen::Index d = Eigen::Index{1} << lat.n_edges();
        m.hamiltonian = Eigen::MatrixXd::Zero(d, d);
        for (Eigen::Index b = 0; b < d; ++b) {
            const auto ub = static_cast<std::uint64_t>(b);
            for (auto pm : m.plaquette_masks) {
                m.hamiltonian(b, b) -= jeff * ((__builtin_popcountll(ub & pm) & 1) ? -1.0 : 1.0);
            }
            for (auto sm : m.star_masks) {
                m.hamiltonian(static_cast<Eigen::Index>(ub ^ sm), b) -= jeff;
            }
        }
    }
    return m;
}

/// prod_s (1 + A_s)|0...0>, normalized: the ground state with trivial
/// holonomy.
inline ToricState toric_ground_state(const ToricModel &m) {
    ToricState psi = ToricState::Zero(Eigen::Index{1} << m.lattice.n_edges());
    psi[0] = 1.0;
    for (auto sm : m.star_masks) {
        psi = psi + apply_x(psi, sm);
    }
    return psi.normalized();
}

enum class StringType { electric, magnetic };

struct StringOperator {
    StringType type = StringType::electric;
    std::vector<int> edges;
};

inline ToricState apply_string(const SquareLattice &lat, const ToricState &psi, const StringOperator &s) {
    for (int e : s.edges) {
        if (e < 0 || e >= lat.n_edges()) {
            throw InvalidArgument("edge outside lattice: " + std::to_string(e));
        }
    }
    detail::require(psi.size() == (Eigen::Index{1} << lat.n_edges()), "state does not match lattice");
    std::uint64_t m = edge_mask(s.edges);
    return s.type == StringType::electric ? apply_z(psi, m) : apply_x(psi, m);
}

/// Shortest edge path between vertices (primal) or plaquettes (dual).
inline std::vector<int> shortest_path(const SquareLattice &lat, int from, int to, bool dual) {
    const int n = dual ? lat.n_plaquettes() : lat.n_vertices();
    detail::require(from >= 0 && from < n && to >= 0 && to < n, "path endpoint out of range");
    std::vector<int> prev_edge(n, -1), prev_node(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) {
            break;
        }
        for (int e = 0; e < lat.n_edges(); ++e) {
            auto [a, b] = dual ? lat.faces(e) : lat.ends(e);
            int w = a == u ? b : b == u ? a : -1;
            if (w >= 0 && !seen[w]) {
                seen[w] = true;
                prev_edge[w] = e;
                prev_node[w] = u;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> path;
    for (int u = to; u != from; u = prev_node[u]) {
        path.push_back(prev_edge[u]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

/// Edges appearing an odd number of times among the boundaries of `region`.
inline std::vector<int> region_boundary(const SquareLattice &lat, const std::vector<int> &region) {
    std::map<int, int> count;
    for (int p : region) {
        detail::require(p >= 0 && p < lat.n_plaquettes(), "plaquette out of range");
        for (int e : lat.boundary(p)) {
            ++count[e];
        }
    }
    std::vector<int> out;
    for (auto [e, c] : count) {
        if (c % 2 == 1) {
            out.push_back(e);
        }
    }
    return out;
}

/// Orders a set of edges into a closed walk from `start`, or nullopt if
/// they do not form a single simple cycle through it.
inline std::optional<std::vector<int>> order_loop(const SquareLattice &lat, const std::vector<int> &edges, int start) {
    if (edges.empty()) {
        return std::nullopt;
    }
    std::map<int, std::vector<int>> incident;
    for (int e : edges) {
        auto [a, b] = lat.ends(e);
        if (a == b) {
            return std::nullopt;
        }
        incident[a].push_back(e);
        incident[b].push_back(e);
    }
    for (const auto &[vtx, es] : incident) {
        if (es.size() != 2) {
            return std::nullopt;
        }
    }
    if (!incident.count(start)) {
        return std::nullopt;
    }
    std::vector<int> walk;
    std::set<int> used;
    int at = start;
    while (walk.size() < edges.size()) {
        int next = -1;
        for (int e : incident[at]) {
            if (!used.count(e)) {
                next = e;
                break;
            }
        }
        if (next < 0) {
            break;
        }
        used.insert(next);
        walk.push_back(next);
        auto [a, b] = lat.ends(next);
        at = a == at ? b : a;
        if (at == start) {
            break;
        }
    }
    if (walk.size() != edges.size() || at != start) {
        return std::nullopt;
    }
    return walk;
}

struct BraidingResult {
    std::complex<double> phase{1.0, 0.0};
    std::vector<int> region;      // plaquettes enclosed by the loop
    std::vector<int> loop;        // boundary edges in walk order
    std::vector<int> vortices;    // plaquettes with B_p = -1 inside the region
    std::vector<int> charges;     // transported charges (vertices on the loop)
};

namespace detail {

/// Smallest index-order prefix of plaquettes that holds the vortices, has a
/// single closed boundary loop, and leaves room for a partner if needed.
inline std::vector<int> default_region(const SquareLattice &lat, int n_fluxes) {
    const int n = lat.n_plaquettes();
    const int limit = n_fluxes % 2 == 1 ? n - 1 : n;
    for (int k = std::max(1, n_fluxes); k <= limit; ++k) {
        std::vector<int> region(k);
        for (int p = 0; p < k; ++p) {
            region[p] = p;
        }
        auto bnd = region_boundary(lat, region);
        if (!bnd.empty() && order_loop(lat, bnd, lat.ends(bnd.front()).first)) {
            return region;
        }
    }
    throw InvalidArgument("loop does not enclose the cluster: no region fits on this torus");
}

}  // namespace detail

/// Creates `n_fluxes` vortices inside `region` and `n_charges` charges on its
/// boundary loop, carries every charge once around the loop hop by hop, and
/// returns <psi_initial | psi_final>. Partners needed for odd counts are
/// placed outside the region (vortex) or off the cluster (charge).
inline BraidingResult braiding_phase(const SquareLattice &lat, int n_charges, int n_fluxes,
                                     std::optional<std::vector<int>> region_in = std::nullopt) {
    make_torus(lat.Lx, lat.Ly);
    detail::require(n_charges >= 0 && n_fluxes >= 0, "anyon counts must be nonnegative");
    ToricModel m = build_toric_hamiltonian(lat, 1.0, false);
    BraidingResult res;
    res.region = region_in ? *region_in : detail::default_region(lat, n_fluxes);
    std::set<int> inside(res.region.begin(), res.region.end());
    if (inside.size() != res.region.size() || res.region.empty()) {
        throw InvalidArgument("region must list distinct plaquettes");
    }
    std::vector<int> bnd = region_boundary(lat, res.region);
    if (bnd.empty()) {
        throw InvalidArgument("loop does not enclose the cluster: region has no boundary");
    }
    const int start = lat.ends(bnd.front()).first;
    auto loop = order_loop(lat, bnd, start);
    if (!loop) {
        throw InvalidArgument("loop does not enclose the cluster: region boundary is not a single closed loop");
    }
    res.loop = *loop;

    // vortex cluster
    if (n_fluxes > static_cast<int>(res.region.size())) {
        throw InvalidArgument("loop does not enclose the cluster: too many vortices for the region");
    }
    std::vector<int> v_sites(res.region.begin(), res.region.begin() + n_fluxes);
    res.vortices = v_sites;
    if (n_fluxes % 2 == 1) {
        int partner = -1;
        for (int p = lat.n_plaquettes() - 1; p >= 0; --p) {
            if (!inside.count(p)) {
                partner = p;
                break;
            }
        }
        if (partner < 0) {
            throw InvalidArgument("loop does not enclose the cluster: no room for the partner vortex");
        }
        v_sites.push_back(partner);
    }
    // charge cluster on the loop vertices
    std::vector<int> loop_vertices;
    {
        int at = start;
        for (int e : res.loop) {
            loop_vertices.push_back(at);
            auto [a, b] = lat.ends(e);
            at = a == at ? b : a;
        }
    }
    if (n_charges > static_cast<int>(loop_vertices.size())) {
        throw InvalidArgument("too many charges for the loop");
    }
    std::vector<int> c_sites(loop_vertices.begin(), loop_vertices.begin() + n_charges);
    res.charges = c_sites;
    if (n_charges % 2 == 1) {
        int partner = -1;
        for (int s = 0; s < lat.n_vertices(); ++s) {
            if (std::find(c_sites.begin(), c_sites.end(), s) == c_sites.end()) {
                partner = s;
                break;
            }
        }
        if (partner < 0) {
            throw InvalidArgument("no room for the partner charge");
        }
        c_sites.push_back(partner);
    }

    ToricState psi = toric_ground_state(m);
    for (std::size_t k = 0; k + 1 < v_sites.size(); k += 2) {
        psi = apply_string(lat, psi, {StringType::magnetic, shortest_path(lat, v_sites[k], v_sites[k + 1], true)});
    }
    for (std::size_t k = 0; k + 1 < c_sites.size(); k += 2) {
        psi = apply_string(lat, psi, {StringType::electric, shortest_path(lat, c_sites[k], c_sites[k + 1], false)});
    }
    for (int p : v_sites) {
        if (m.plaquette_value(psi, p) > -1 + 1e-12) {
            throw NumericalFailure("internal: vortex not created");
        }
    }
    for (int s : c_sites) {
        if (m.star_value(psi, s) > -1 + 1e-12) {
            throw NumericalFailure("internal: charge not created");
        }
    }

    const ToricState initial = psi;
    for (int c : res.charges) {
        // walk the loop starting at this charge's vertex
        auto walk = order_loop(lat, res.loop, c);
        if (!walk) {
            throw NumericalFailure("internal: loop walk failed");
        }
        for (int e : *walk) {
            psi = apply_z(psi, std::uint64_t{1} << e);
        }
    }
    res.phase = initial.dot(psi);
    return res;
}

enum class AnyonType { charge, vortex };

/// Swaps two like anyons through a third site by string recombination and
/// returns <psi_initial | psi_final>.
inline std::complex<double> exchange_phase(const SquareLattice &lat, AnyonType type) {
    make_torus(lat.Lx, lat.Ly);
    ToricModel m = build_toric_hamiltonian(lat, 1.0, false);
    const bool dual = type == AnyonType::vortex;
    const StringType st = dual ? StringType::magnetic : StringType::electric;
    const int n = dual ? lat.n_plaquettes() : lat.n_vertices();
    detail::require(n >= 3, "exchange needs at least three sites");
    const int s1 = 0, s2 = 1;
    // the three moves form a closed loop; it must not wind around the torus
    std::vector<std::uint8_t> hx(lat.n_edges(), 0), vy(lat.n_edges(), 0);
    for (int x = 0; x < lat.Lx; ++x) {
        hx[dual ? lat.h(x, 0) : lat.v(x, 0)] = 1;
    }
    for (int y = 0; y < lat.Ly; ++y) {
        vy[dual ? lat.v(0, y) : lat.h(0, y)] = 1;
    }
    for (int tmp = n - 1; tmp >= 2; --tmp) {
        std::vector<std::vector<int>> moves = {shortest_path(lat, s1, tmp, dual), shortest_path(lat, s2, s1, dual),
                                               shortest_path(lat, tmp, s2, dual)};
        std::vector<std::uint8_t> net(lat.n_edges(), 0);
        for (const auto &mv : moves) {
            for (int e : mv) {
                net[e] ^= 1;
            }
        }
        int wx = 0, wy = 0;
        for (int e = 0; e < lat.n_edges(); ++e) {
            wx ^= net[e] & hx[e];
            wy ^= net[e] & vy[e];
        }
        if (wx || wy) {
            continue;
        }
        ToricState psi = apply_string(lat, toric_ground_state(m), {st, shortest_path(lat, s1, s2, dual)});
        const ToricState initial = psi;
        for (const auto &mv : moves) {
            psi = apply_string(lat, psi, {st, mv});
        }
        return initial.dot(psi);
    }
    throw NumericalFailure("no contractible exchange path");
}

}  // namespace majlab
