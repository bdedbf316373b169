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

// Command-line driver. Exit codes: 0 success, 2 usage/input error,
// 3 numerical failure (impossible outcome, leakage, ...).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "majlab/encoding.hpp"
#include "majlab/honeycomb.hpp"
#include "majlab/majorana_algebra.hpp"
#include "majlab/protocols.hpp"
#include "majlab/toric_code.hpp"

using json = nlohmann::ordered_json;
using namespace majlab;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Common {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

void emit(const Common &c, const std::string &text) {
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot open output file: " + c.out);
    }
    f << text;
}

void emit_json(const Common &c, const json &j) { emit(c, j.dump(2) + "\n"); }

/// "a:b:n" -> n evenly spaced values, or a single number.
std::vector<double> parse_range(const std::string &s) {
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(tok, &used));
            if (used != tok.size()) {
                throw InvalidArgument("bad number");
            }
        } catch (const std::exception &) {
            throw InvalidArgument("malformed range '" + s + "'");
        }
    }
    if (parts.size() == 1) {
        return parts;
    }
    if (parts.size() != 3 || parts[2] < 1 || parts[2] != static_cast<int>(parts[2])) {
        throw InvalidArgument("range must be 'value' or 'start:stop:count'");
    }
    int n = static_cast<int>(parts[2]);
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        out.push_back(n == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * k / (n - 1));
    }
    return out;
}

std::vector<double> parse_list(const std::string &s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception &) {
            throw InvalidArgument("malformed number list '" + s + "'");
        }
    }
    if (out.empty()) {
        throw InvalidArgument("empty list");
    }
    return out;
}

// ---------------------------------------------------------------------------

struct PhaseScanArgs {
    std::string jx = "0.1:1:4", jy = "0.1:1:4", jz = "0.1:1:4";
    int simplex = 0;
    int grid = 60;
    int refine = 12;
};

void run_phase_scan(const Common &c, const PhaseScanArgs &a) {
    std::vector<std::array<double, 3>> points;
    if (a.simplex > 0) {
        // interior barycentric grid on Jx + Jy + Jz = 1
        const int n = a.simplex;
        for (int i = 1; i < n; ++i) {
            for (int j = 1; i + j < n; ++j) {
                points.push_back({double(i) / n, double(j) / n, double(n - i - j) / n});
            }
        }
        if (points.empty()) {
            throw InvalidArgument("empty range: --simplex must be at least 3");
        }
    } else {
        for (double x : parse_range(a.jx)) {
            for (double y : parse_range(a.jy)) {
                for (double z : parse_range(a.jz)) {
                    points.push_back({x, y, z});
                }
            }
        }
    }
    json rows = json::array();
    std::string csv = "# majlab phase-scan seed=" + std::to_string(c.seed) + "\nJx,Jy,Jz,label,min_gap\n";
    for (auto [x, y, z] : points) {
        PhaseLabel label = classify_phase(x, y, z);
        GapResult g = bz_min_gap({x, y, z}, a.grid, a.refine);
        csv += num(x) + "," + num(y) + "," + num(z) + "," + to_string(label) + "," + num(g.min_energy) + "\n";
        rows.push_back({{"Jx", x}, {"Jy", y}, {"Jz", z}, {"label", to_string(label)}, {"min_gap", g.min_energy}});
    }
    if (c.format == "csv") {
        emit(c, csv);
    } else {
        emit_json(c, {{"command", "phase-scan"}, {"seed", c.seed}, {"grid", a.grid}, {"rows", rows}});
    }
}

struct SpectrumArgs {
    double jx = 1, jy = 1, jz = 1, hx = 0, hy = 0, hz = 0;
    int grid = 24;
};

void run_spectrum(const Common &c, const SpectrumArgs &a) {
    detail::require(a.grid >= 1, "grid must be positive");
    HoneycombCouplings cp{a.jx, a.jy, a.jz, a.hx, a.hy, a.hz};
    std::string csv = "# majlab spectrum seed=" + std::to_string(c.seed) + "\nqx,qy,eps,delta,delta_tilde,energy\n";
    json rows = json::array();
    for (int i = 0; i < a.grid; ++i) {
        for (int j = 0; j < a.grid; ++j) {
            double qx = -M_PI + 2 * M_PI * i / a.grid, qy = -M_PI + 2 * M_PI * j / a.grid;
            SpectrumSample s = dispersion(cp, qx, qy);
            csv += num(s.qx) + "," + num(s.qy) + "," + num(s.eps) + "," + num(s.delta) + "," + num(s.delta_tilde) +
                   "," + num(s.energy) + "\n";
            rows.push_back({{"qx", s.qx},
                            {"qy", s.qy},
                            {"eps", s.eps},
                            {"delta", s.delta},
                            {"delta_tilde", s.delta_tilde},
                            {"energy", s.energy}});
        }
    }
    if (c.format == "csv") {
        emit(c, csv);
    } else {
        emit_json(c, {{"command", "spectrum"}, {"seed", c.seed}, {"rows", rows}});
    }
}

struct EdArgs {
    int rows = 2, cols = 3;
    double jx = 1, jy = 1, jz = 1;
};

void run_ed_verify(const Common &c, const EdArgs &a) {
    LatticeSpec lat = brick_wall(a.rows, a.cols);
    if (lat.n_sites() > 12) {
        throw InvalidArgument("ed-verify is limited to 12 spins");
    }
    HoneycombCouplings cp{a.jx, a.jy, a.jz};
    std::vector<int> flags(lat.z_links().size(), 1);
    double jw = quadratic_spectrum(build_jw_quadratic(lat, cp, flags)).ground_energy;
    double ed = sector_ground_energy_ed(lat, cp, flags);
    SpinModel m = build_spin_hamiltonian(lat, cp);
    Eigen::MatrixXcd h = m.dense();
    double comm = 0.0;
    json signs = json::array();
    for (std::size_t p = 0; p < m.plaquettes.size(); ++p) {
        Eigen::MatrixXcd w(m.plaquettes[p]);
        comm = std::max(comm, (h * w - w * h).cwiseAbs().maxCoeff());
        signs.push_back(plaquette_alpha_sign(lat, lat.plaquettes[p]));
    }
    bool pass = std::abs(jw - ed) < 1e-8 && comm < 1e-12;
    json j = {{"command", "ed-verify"},
              {"seed", c.seed},
              {"rows", a.rows},
              {"cols", a.cols},
              {"spins", lat.n_sites()},
              {"jw_ground_energy", jw},
              {"ed_ground_energy", ed},
              {"difference", std::abs(jw - ed)},
              {"max_plaquette_commutator", comm},
              {"plaquette_alpha_signs", signs},
              {"pass", pass}};
    if (c.format == "csv") {
        emit(c, "# majlab ed-verify seed=" + std::to_string(c.seed) +
                    "\nrows,cols,jw_ground_energy,ed_ground_energy,difference,max_plaquette_commutator\n" +
                    std::to_string(a.rows) + "," + std::to_string(a.cols) + "," + num(jw) + "," + num(ed) + "," +
                    num(std::abs(jw - ed)) + "," + num(comm) + "\n");
    } else {
        emit_json(c, j);
    }
}

struct BraidArgs {
    std::string program;
    int qubits = 1;
    std::string input;
    std::string state;
};

json state_json(const FockState &s) {
    json amps = json::array();
    for (Eigen::Index k = 0; k < s.amplitudes().size(); ++k) {
        amps.push_back(complex_json(s.amplitudes()[k]));
    }
    return {{"n_modes", s.n_modes()}, {"amplitudes", amps}};
}

FockState state_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n_modes") || !j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw InvalidArgument("state file needs n_modes and amplitudes");
    }
    const int n = j["n_modes"].get<int>();
    detail::require(n >= 1 && n <= kDefaultMaxModes, "state too large");
    const json &a = j["amplitudes"];
    if (a.size() != (std::size_t{1} << n)) {
        throw InvalidArgument("state file: expected " + std::to_string(std::size_t{1} << n) + " amplitudes");
    }
    Eigen::VectorXcd v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_array() || a[k].size() != 2) {
            throw InvalidArgument("state file: amplitude " + std::to_string(k) + " is not [re, im]");
        }
        v[k] = cplx(a[k][0].get<double>(), a[k][1].get<double>());
    }
    return FockState(n, v);
}

std::string gate_name(const Eigen::MatrixXcd &u) {
    if (u.rows() != 2) {
        return "";
    }
    const cplx i(0, 1);
    const std::vector<std::pair<std::string, Eigen::Matrix2cd>> named = {
        {"I", (Eigen::Matrix2cd() << 1, 0, 0, 1).finished()},
        {"X", (Eigen::Matrix2cd() << 0, 1, 1, 0).finished()},
        {"Y", (Eigen::Matrix2cd() << 0, -i, i, 0).finished()},
        {"Z", (Eigen::Matrix2cd() << 1, 0, 0, -1).finished()},
        {"S", (Eigen::Matrix2cd() << 1, 0, 0, i).finished()},
        {"S_dag", (Eigen::Matrix2cd() << 1, 0, 0, -i).finished()},
    };
    for (const auto &[name, g] : named) {
        // equal up to phase iff |tr(g^dagger u)| = 2
        if (std::abs(std::abs((g.adjoint() * u).trace()) - 2.0) < 1e-9) {
            return name;
        }
    }
    return "clifford";
}

void run_braid(const Common &c, const BraidArgs &a) {
    std::string text;
    if (a.program == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(a.program, std::ios::binary);
        if (!f) {
            throw InvalidArgument("cannot read program file: " + a.program);
        }
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    BraidProgram prog = parse_braid_program(text);
    detail::check_qubits(a.qubits, kDefaultMaxQubits);
    EncodingLayout layout{a.qubits};
    for (const auto &ins : prog.instructions) {
        int hi = ins.kind == ProgramInstruction::Kind::braid ? ins.generator.j : std::max(ins.i, ins.j);
        if (hi > layout.n_majoranas()) {
            throw InvalidArgument("line " + std::to_string(ins.line) + ": mode " + std::to_string(hi) +
                                  " outside the " + std::to_string(layout.n_majoranas()) + "-mode layout");
        }
    }
    std::vector<int> bits(a.qubits, 0);
    if (!a.input.empty()) {
        if (static_cast<int>(a.input.size()) != a.qubits) {
            throw InvalidArgument("--input needs one bit per qubit");
        }
        for (int q = 0; q < a.qubits; ++q) {
            detail::require(a.input[q] == '0' || a.input[q] == '1', "--input must be a bit string");
            bits[q] = a.input[q] - '0';
        }
    }
    RandomSource rng(c.seed);
    EncodedRegister reg = encode_basis(bits);
    if (!a.state.empty()) {
        detail::require(a.input.empty(), "--state and --input are exclusive");
        std::ifstream f(a.state, std::ios::binary);
        if (!f) {
            throw InvalidArgument("cannot read state file: " + a.state);
        }
        try {
            reg.state = state_from_json(json::parse(f));
        } catch (const json::exception &e) {
            throw InvalidArgument(std::string("state file: ") + e.what());
        }
        detail::require(reg.state.n_modes() == 2 * a.qubits, "state file: n_modes must be twice --qubits");
    }
    json records = json::array();
    for (const auto &ins : prog.instructions) {
        if (ins.kind == ProgramInstruction::Kind::braid) {
            reg.state = apply_braid(reg.state, ins.generator);
        } else {
            auto [rec, post] = measure_pair(reg.state, ins.i, ins.j, rng);
            reg.state = post;
            records.push_back({{"line", ins.line},
                               {"observable", rec.observable.to_string()},
                               {"outcome", rec.outcome},
                               {"probability", rec.pre_probability}});
        }
    }
    json j = {{"command", "braid-run"}, {"seed", c.seed}, {"qubits", a.qubits}, {"input", a.input.empty() ? std::string(a.qubits, '0') : a.input}};
    j["instructions"] = prog.instructions.size();
    j["measurements"] = records;
    Eigen::VectorXcd logical = decode(reg);
    json amps = json::array();
    for (Eigen::Index k = 0; k < logical.size(); ++k) {
        amps.push_back(complex_json(logical[k]));
    }
    j["final_state"] = amps;
    j["fock_state"] = state_json(reg.state);
    if (!prog.has_measurements()) {
        BraidWord w = prog.braid_word();
        const Eigen::Index d = Eigen::Index{1} << a.qubits;
        Eigen::MatrixXcd u(d, d);
        for (Eigen::Index k = 0; k < d; ++k) {
            EncodedRegister col{a.qubits, apply_braid_word(logical_basis_state(a.qubits, k), w)};
            for (Eigen::Index r = 0; r < d; ++r) {
                u(r, k) = overlap(logical_basis_state(a.qubits, r), col.state);
            }
        }
        // global phase fixed on the first nonzero entry of column 0
        for (Eigen::Index r = 0; r < d; ++r) {
            if (std::abs(u(r, 0)) > 1e-12) {
                u *= std::conj(u(r, 0)) / std::abs(u(r, 0));
                break;
            }
        }
        json mat = json::array();
        for (Eigen::Index r = 0; r < d; ++r) {
            json row = json::array();
            for (Eigen::Index k = 0; k < d; ++k) {
                row.push_back(complex_json(u(r, k)));
            }
            mat.push_back(row);
        }
        j["logical_unitary"] = mat;
        j["gate"] = gate_name(u);
        json frame = json::object();
        for (int q = 1; q <= a.qubits; ++q) {
            for (char l : {'X', 'Z'}) {
                SignedPauli p = SignedPauli::single(q, l);
                frame[p.to_string()] = pauli_image(w, p, layout).to_string();
            }
        }
        j["pauli_frame"] = frame;
    }
    if (c.format == "csv") {
        std::string csv = "# majlab braid-run seed=" + std::to_string(c.seed) + "\nindex,re,im\n";
        for (Eigen::Index k = 0; k < logical.size(); ++k) {
            csv += std::to_string(k) + "," + num(logical[k].real()) + "," + num(logical[k].imag()) + "\n";
        }
        emit(c, csv);
    } else {
        emit_json(c, j);
    }
}

struct ProtocolArgs {
    std::string kind = "pi8";
    std::string epsilon = "0";
    int trials = 100;
    std::string noise = "dephase";
    std::string input;
};

void run_protocol(const Common &c, const ProtocolArgs &a) {
    GateProtocol proto;
    if (a.kind == "pi8") {
        proto = GateProtocol::pi8;
    } else if (a.kind == "cz") {
        proto = GateProtocol::cz;
    } else {
        throw InvalidArgument("--kind must be pi8 or cz");
    }
    NoiseModel noise;
    if (a.noise == "dephase") {
        noise = NoiseModel::dephase_to_orthogonal;
    } else if (a.noise == "depolarize") {
        noise = NoiseModel::depolarize;
    } else if (a.noise == "none") {
        noise = NoiseModel::none;
    } else {
        throw InvalidArgument("--noise must be dephase, depolarize or none");
    }
    std::vector<double> eps = parse_list(a.epsilon);
    for (double e : eps) {
        if (!(e >= 0.0 && e < 1.0)) {
            throw InvalidArgument("epsilon must lie in [0, 1)");
        }
    }
    std::optional<Eigen::VectorXcd> fixed;
    const int nq = proto == GateProtocol::pi8 ? 1 : 2;
    if (a.input == "plus") {
        fixed = Eigen::VectorXcd::Ones(Eigen::Index{1} << nq).normalized();
    } else if (!a.input.empty()) {
        throw InvalidArgument("--input must be 'plus' or omitted for random inputs");
    }
    RandomSource rng(c.seed);
    // one recorded run on the ideal ancilla
    RandomSource sample_rng(c.seed ^ 0x9e3779b97f4a7c15ull);
    Eigen::VectorXcd sample_in = fixed ? *fixed : random_logical_vector(nq, sample_rng);
    NoisyState ideal = prepare_ancilla({proto == GateProtocol::pi8 ? AncillaKind::a4 : AncillaKind::a8, 0.0,
                                        NoiseModel::dephase_to_orthogonal});
    ProtocolTrace trace;
    double f0 = protocol_fidelity(proto, sample_in, ideal.members[0].second, sample_rng, &trace);
    std::vector<FidelityRow> rows = gate_fidelity_sweep(proto, eps, a.trials, noise, rng, fixed);

    json outcomes = json::array();
    for (const auto &[label, v] : trace.outcomes) {
        outcomes.push_back({{"observable", label}, {"outcome", v}});
    }
    json table = json::array();
    std::string csv = "# majlab protocol seed=" + std::to_string(c.seed) + "\nepsilon,fidelity,stderr,min,trials\n";
    for (const auto &r : rows) {
        table.push_back(
            {{"epsilon", r.epsilon}, {"fidelity", r.mean}, {"stderr", r.stderr_}, {"min", r.min}, {"trials", r.trials}});
        csv += num(r.epsilon) + "," + num(r.mean) + "," + num(r.stderr_) + "," + num(r.min) + "," +
               std::to_string(r.trials) + "\n";
    }
    if (c.format == "csv") {
        emit(c, csv);
        return;
    }
    emit_json(c, {{"command", "protocol"},
                  {"protocol", a.kind},
                  {"seed", c.seed},
                  {"noise", a.noise},
                  {"outcomes", outcomes},
                  {"branch_probabilities", trace.probabilities},
                  {"corrections", trace.corrections},
                  {"fidelity", f0},
                  {"sweep", table}});
}

struct ToricArgs {
    int lx = 2, ly = 2;
    int charges = 1, fluxes = 1;
};

void run_toric(const Common &c, const ToricArgs &a) {
    SquareLattice lat = make_torus(a.lx, a.ly);
    BraidingResult r = braiding_phase(lat, a.charges, a.fluxes);
    if (c.format == "csv") {
        emit(c, "# majlab toric-braid seed=" + std::to_string(c.seed) + "\nphase_re,phase_im\n" + num(r.phase.real()) +
                    "," + num(r.phase.imag()) + "\n");
        return;
    }
    emit_json(c, {{"command", "toric-braid"},
                  {"seed", c.seed},
                  {"lx", a.lx},
                  {"ly", a.ly},
                  {"charges", a.charges},
                  {"fluxes", a.fluxes},
                  {"region", r.region},
                  {"loop", r.loop},
                  {"phase_re", r.phase.real()},
                  {"phase_im", r.phase.imag()}});
}

void add_common(CLI::App *sub, Common &c, const std::string &default_format) {
    c.format = default_format;
    sub->add_option("--seed", c.seed, "RNG seed (echoed in the output)");
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"majlab: Majorana braiding, magic-state protocols, honeycomb and toric code models"};
    app.require_subcommand(1);

    Common c_scan, c_spec, c_ed, c_braid, c_proto, c_toric;

    PhaseScanArgs scan;
    auto *s1 = app.add_subcommand("phase-scan", "classify honeycomb phases over a coupling grid");
    add_common(s1, c_scan, "csv");
    s1->add_option("--jx", scan.jx, "value or start:stop:count");
    s1->add_option("--jy", scan.jy, "value or start:stop:count");
    s1->add_option("--jz", scan.jz, "value or start:stop:count");
    s1->add_option("--simplex", scan.simplex, "interior grid on Jx+Jy+Jz=1 with this many divisions");
    s1->add_option("--grid", scan.grid, "Brillouin-zone grid size")->check(CLI::Range(3, 100000));
    s1->add_option("--refine", scan.refine, "refinement levels around the grid minimum")->check(CLI::Range(0, 64));

    SpectrumArgs spec;
    auto *s2 = app.add_subcommand("spectrum", "dump the Bloch dispersion on a grid");
    add_common(s2, c_spec, "csv");
    s2->add_option("--jx", spec.jx);
    s2->add_option("--jy", spec.jy);
    s2->add_option("--jz", spec.jz);
    s2->add_option("--hx", spec.hx);
    s2->add_option("--hy", spec.hy);
    s2->add_option("--hz", spec.hz);
    s2->add_option("--grid", spec.grid)->check(CLI::Range(1, 10000));

    EdArgs ed;
    auto *s3 = app.add_subcommand("ed-verify", "compare brick-wall ED with the Jordan-Wigner quadratic form");
    add_common(s3, c_ed, "json");
    s3->add_option("--rows", ed.rows);
    s3->add_option("--cols", ed.cols);
    s3->add_option("--jx", ed.jx);
    s3->add_option("--jy", ed.jy);
    s3->add_option("--jz", ed.jz);

    BraidArgs br;
    auto *s4 = app.add_subcommand("braid-run", "execute a braid program on encoded qubits");
    add_common(s4, c_braid, "json");
    s4->add_option("program", br.program, "program file, or - for stdin")->required();
    s4->add_option("--qubits", br.qubits, "number of encoded qubits");
    s4->add_option("--input", br.input, "initial logical bits, e.g. 01");
    s4->add_option("--state", br.state, "initial Fock state as JSON {n_modes, amplitudes}");

    ProtocolArgs pr;
    auto *s5 = app.add_subcommand("protocol", "fidelity sweep of the pi/8 or controlled-phase protocol");
    add_common(s5, c_proto, "json");
    s5->add_option("--kind", pr.kind, "pi8 or cz");
    s5->add_option("--epsilon", pr.epsilon, "comma-separated ancilla infidelities");
    s5->add_option("--trials", pr.trials)->check(CLI::Range(1, 10000000));
    s5->add_option("--noise", pr.noise, "dephase, depolarize or none");
    s5->add_option("--input", pr.input, "'plus' for a fixed |+> input");

    ToricArgs tc;
    auto *s6 = app.add_subcommand("toric-braid", "braid charges around vortices on a torus");
    add_common(s6, c_toric, "json");
    s6->add_option("--lx", tc.lx);
    s6->add_option("--ly", tc.ly);
    s6->add_option("--charges", tc.charges);
    s6->add_option("--fluxes", tc.fluxes);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (s1->parsed()) {
            run_phase_scan(c_scan, scan);
        } else if (s2->parsed()) {
            run_spectrum(c_spec, spec);
        } else if (s3->parsed()) {
            run_ed_verify(c_ed, ed);
        } else if (s4->parsed()) {
            run_braid(c_braid, br);
        } else if (s5->parsed()) {
            run_protocol(c_proto, pr);
        } else if (s6->parsed()) {
            run_toric(c_toric, tc);
        }
    } catch (const InvalidArgument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalFailure &e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
