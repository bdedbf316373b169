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

// Dense-matrix checks of the braid group relations for nearest-neighbour
// generators B_k = B_{k,k+1}, 1 <= k < n.

#pragma once

#include <string>
#include <vector>

#include "majlab/fock.hpp"
#include "majlab/majorana_algebra.hpp"

namespace majlab {

struct RelationCheck {
    std::string relation;
    int a = 0;  // first generator index (B_{a,a+1}); 0 if not applicable
    int b = 0;
    double error = 0.0;
    bool pass = false;
};

struct RelationReport {
    int n_modes = 0;
    double tolerance = 1e-12;
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto &c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return !checks.empty();
    }
};

inline RelationReport verify_braid_relations(int n_modes, double tol = 1e-12) {
    detail::require(n_modes >= 4, "verify_braid_relations needs at least four modes");
    detail::require(n_modes <= 2 * kDefaultMaxModes, "too many modes");
    const int nf = (n_modes + 1) / 2;
    std::vector<Eigen::MatrixXcd> b(n_modes);  // b[k] = B_{k,k+1}, k = 1..n-1
    for (int k = 1; k < n_modes; ++k) {
        b[k] = braid_matrix(nf, BraidGenerator::cw(k, k + 1));
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(b[1].rows(), b[1].cols());
    RelationReport rep;
    rep.n_modes = n_modes;
    rep.tolerance = tol;
    auto add = [&](std::string rel, int a, int c, double err) {
        rep.checks.push_back({std::move(rel), a, c, err, err < tol});
    };
    for (int i = 1; i < n_modes; ++i) {
        for (int j = i + 2; j < n_modes; ++j) {
            add("far_commutation", i, j, (b[i] * b[j] - b[j] * b[i]).cwiseAbs().maxCoeff());
        }
    }
    for (int i = 1; i + 1 < n_modes; ++i) {
        add("yang_baxter", i, i + 1, (b[i] * b[i + 1] * b[i] - b[i + 1] * b[i] * b[i + 1]).cwiseAbs().maxCoeff());
    }
    for (int i = 1; i < n_modes; ++i) {
        Eigen::MatrixXcd b2 = b[i] * b[i];
        Eigen::MatrixXcd b4 = b2 * b2;
        add("square", i, 0, (b2 + operator_matrix(nf, MajoranaMonomial::product(0, {i, i + 1}))).cwiseAbs().maxCoeff());
        add("fourth_power", i, 0, (b4 + id).cwiseAbs().maxCoeff());
        add("eighth_power", i, 0, (b4 * b4 - id).cwiseAbs().maxCoeff());
    }
    for (int i = 2; i < n_modes; ++i) {
        Eigen::MatrixXcd comm = b[i - 1] * b[i] - b[i] * b[i - 1];
        Eigen::MatrixXcd want = operator_matrix(nf, MajoranaMonomial::product(0, {i - 1, i + 1}));
        double err = (comm - want).cwiseAbs().maxCoeff();
        auto sym = braid_commutator(BraidGenerator::cw(i - 1, i), BraidGenerator::cw(i, i + 1));
        if (!sym || !(*sym == MajoranaMonomial::product(0, {i - 1, i + 1}))) {
            err = std::max(err, 1.0);
        }
        add("commutator", i - 1, i, err);
    }
    return rep;
}

}  // namespace majlab
