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

// Exact algebra of Majorana monomials and the braid-group representation.
//
// Every quantity here is exact: phases are powers of i (integers mod 4) and
// mode indices are 1-based integers. A monomial i^p * g_{m1} ... g_{mk} is
// kept in canonical form with strictly increasing modes.
//
// Braid words are sequences of generators in APPLICATION order: the first
// generator acts first. As an operator the word is U = U_k ... U_2 U_1, and
// conjugation of an operator m by the word is U m U^dagger.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "majlab/error.hpp"

namespace majlab {

inline int mod4(int p) { return ((p % 4) + 4) % 4; }

/// i^phase * g_{modes[0]} * ... * g_{modes[k-1]} with strictly increasing
/// modes.
struct MajoranaMonomial {
    int phase = 0;
    std::vector<int> modes;

    static MajoranaMonomial identity() { return {}; }

    static MajoranaMonomial mode(int m) { return {0, {m}}; }

    /// Multiplies out a product of single Majoranas in the given order. Each
    /// swap of adjacent distinct modes flips the sign; equal neighbours cancel.
    static MajoranaMonomial product(int phase, const std::vector<int> &factors) {
        MajoranaMonomial out;
        out.phase = mod4(phase);
        for (int f : factors) {
            out.push_back(f);
        }
        return out;
    }

    std::size_t degree() const { return modes.size(); }
    bool is_even() const { return modes.size() % 2 == 0; }
    bool is_identity() const { return phase == 0 && modes.empty(); }

    /// (i^p g_S)^dagger = i^-p (-1)^{k(k-1)/2} g_S.
    bool is_hermitian() const {
        std::size_t k = modes.size();
        int reversal = static_cast<int>((k * (k - 1) / 2) % 2);
        return mod4(2 * phase) == mod4(2 * reversal);
    }

    MajoranaMonomial adjoint() const {
        std::size_t k = modes.size();
        int reversal = static_cast<int>((k * (k - 1) / 2) % 2);
        return {mod4(-phase + 2 * reversal), modes};
    }

    MajoranaMonomial negated() const { return {mod4(phase + 2), modes}; }
    MajoranaMonomial times_i(int power = 1) const { return {mod4(phase + power), modes}; }

    bool commutes_with(const MajoranaMonomial &o) const {
        std::size_t shared = 0;
        for (int m : modes) {
            shared += std::binary_search(o.modes.begin(), o.modes.end(), m) ? 1 : 0;
        }
        return (modes.size() * o.modes.size() - shared) % 2 == 0;
    }

    MajoranaMonomial operator*(const MajoranaMonomial &rhs) const {
        MajoranaMonomial out = *this;
        out.phase = mod4(out.phase + rhs.phase);
        for (int f : rhs.modes) {
            out.push_back(f);
        }
        return out;
    }

    bool operator==(const MajoranaMonomial &) const = default;

    int max_mode() const { return modes.empty() ? 0 : modes.back(); }

    std::string to_string() const {
        static const char *const kPhase[] = {"", "i*", "-", "-i*"};
        std::ostringstream os;
        os << kPhase[phase];
        if (modes.empty()) {
            os << "1";
        }
        for (std::size_t n = 0; n < modes.size(); ++n) {
            os << (n ? "*" : "") << "g" << modes[n];
        }
        return os.str();
    }

   private:
    // Right-multiplies by a single Majorana, keeping canonical form.
    void push_back(int f) {
        auto pos = std::upper_bound(modes.begin(), modes.end(), f);
        auto passed = static_cast<int>(modes.end() - pos);
        phase = mod4(phase + 2 * (passed % 2));
        if (pos != modes.begin() && *(pos - 1) == f) {
            modes.erase(pos - 1);
        } else {
            modes.insert(pos, f);
        }
    }
};

/// Re-canonicalizes an arbitrary (phase, factor list); idempotent on
/// canonical input.
inline MajoranaMonomial normalize(int phase, const std::vector<int> &factors) {
    return MajoranaMonomial::product(phase, factors);
}

inline MajoranaMonomial normalize(const MajoranaMonomial &m) { return MajoranaMonomial::product(m.phase, m.modes); }

enum class Orientation { clockwise, anticlockwise };

/// Clockwise B_{i,j} = exp(-(pi/4) g_i g_j) sends g_i -> g_j and g_j -> -g_i;
/// the anticlockwise generator is its inverse.
struct BraidGenerator {
    int i = 1;
    int j = 2;
    Orientation orientation = Orientation::clockwise;

    BraidGenerator() = default;
    BraidGenerator(int i_, int j_, Orientation o = Orientation::clockwise) : i(i_), j(j_), orientation(o) {
        detail::require(i_ >= 1 && j_ >= 1, "braid generator indices are 1-based");
        detail::require(i_ < j_, "braid generator requires i < j");
    }

    static BraidGenerator cw(int i, int j) { return {i, j, Orientation::clockwise}; }
    static BraidGenerator ccw(int i, int j) { return {i, j, Orientation::anticlockwise}; }

    BraidGenerator inverse() const {
        return {i, j, orientation == Orientation::clockwise ? Orientation::anticlockwise : Orientation::clockwise};
    }

    bool clockwise() const { return orientation == Orientation::clockwise; }

    /// Image of a single g_k under conjugation: (sign, mode).
    std::pair<int, int> image(int k) const {
        if (k == i) {
            return {clockwise() ? 1 : -1, j};
        }
        if (k == j) {
            return {clockwise() ? -1 : 1, i};
        }
        return {1, k};
    }

    /// The bilinear g_i g_j; the unitary is (1 + s*g_i g_j)/sqrt(2) with
    /// s = -1 for clockwise.
    MajoranaMonomial bilinear() const { return {0, {i, j}}; }

    std::string to_string() const {
        std::ostringstream os;
        os << (clockwise() ? "B" : "Binv") << " " << i << " " << j;
        return os.str();
    }

    bool operator==(const BraidGenerator &) const = default;
};

struct BraidWord {
    std::vector<BraidGenerator> generators;

    bool empty() const { return generators.empty(); }
    std::size_t size() const { return generators.size(); }

    BraidWord inverse() const {
        BraidWord w;
        for (auto it = generators.rbegin(); it != generators.rend(); ++it) {
            w.generators.push_back(it->inverse());
        }
        return w;
    }

    BraidWord then(const BraidWord &next) const {
        BraidWord w = *this;
        w.generators.insert(w.generators.end(), next.generators.begin(), next.generators.end());
        return w;
    }

    int max_mode() const {
        int m = 0;
        for (const auto &g : generators) {
            m = std::max(m, g.j);
        }
        return m;
    }

    bool operator==(const BraidWord &) const = default;
};

inline MajoranaMonomial conjugate(const BraidGenerator &g, const MajoranaMonomial &m) {
    int phase = m.phase;
    std::vector<int> factors;
    factors.reserve(m.modes.size());
    for (int k : m.modes) {
        auto [sign, image] = g.image(k);
        if (sign < 0) {
            phase += 2;
        }
        factors.push_back(image);
    }
    return normalize(phase, factors);
}

/// U m U^dagger for the word U, symbolically. Mode indices must lie in
/// [1, n_modes].
inline MajoranaMonomial braid_conjugate(const BraidWord &word, const MajoranaMonomial &m, int n_modes) {
    detail::require(m.max_mode() <= n_modes && (m.modes.empty() || m.modes.front() >= 1),
                    "monomial mode index out of range");
    detail::require(word.max_mode() <= n_modes, "braid word mode index out of range");
    MajoranaMonomial out = m;
    for (const auto &g : word.generators) {
        out = conjugate(g, out);
    }
    return out;
}

/// Nearest-neighbour compilation of B_{i,j}, j >= i + 2. The returned word is
/// in application order, so its operator product reads
/// B_{j-1,j} ... B_{i+1,i+2} B_{i,i+1} B^dagger_{i+1,i+2} ... B^dagger_{j-1,j}.
inline BraidWord decompose_nonlocal(int i, int j, Orientation o = Orientation::clockwise) {
    if (i < 1 || i >= j - 1) {
        throw InvalidArgument("decompose_nonlocal: already nearest-neighbour or invalid (need i <= j-2)");
    }
    BraidWord w;
    for (int k = j - 1; k >= i + 1; --k) {
        w.generators.push_back(BraidGenerator::ccw(k, k + 1));
    }
    w.generators.push_back(BraidGenerator(i, i + 1, o));
    for (int k = i + 1; k <= j - 1; ++k) {
        w.generators.push_back(BraidGenerator::cw(k, k + 1));
    }
    return w;
}

/// [B_a, B_b] = s_a s_b [g_a, g_b] / 2 where B = (1 + s g)/sqrt(2). Bilinears
/// sharing exactly one mode anticommute, so the commutator is the monomial
/// s_a s_b g_a g_b; otherwise it vanishes.
inline std::optional<MajoranaMonomial> braid_commutator(const BraidGenerator &a, const BraidGenerator &b) {
    MajoranaMonomial ga = a.bilinear();
    MajoranaMonomial gb = b.bilinear();
    if (ga.commutes_with(gb)) {
        return std::nullopt;
    }
    MajoranaMonomial c = ga * gb;
    int sa = a.clockwise() ? -1 : 1;
    int sb = b.clockwise() ? -1 : 1;
    return sa * sb > 0 ? c : c.negated();
}

// ---------------------------------------------------------------------------
// Logical Pauli layer for the four-Majoranas-per-qubit encoding.

/// sign * (tensor product of letters); sign is i^phase.
struct SignedPauli {
    int phase = 0;
    std::map<int, char> letters;  // qubit (1-based) -> 'X' | 'Y' | 'Z'

    static SignedPauli single(int qubit, char letter, int phase = 0) {
        SignedPauli p;
        p.phase = mod4(phase);
        if (letter != 'I') {
            p.letters[qubit] = letter;
        }
        return p;
    }

    bool operator==(const SignedPauli &) const = default;

    std::string to_string() const {
        static const char *const kPhase[] = {"+", "+i", "-", "-i"};
        std::ostringstream os;
        os << kPhase[phase];
        if (letters.empty()) {
            os << "I";
        }
        for (auto [q, l] : letters) {
            os << l << q;
        }
        return os.str();
    }
};

/// Majorana modes of qubit q (1-based): 4q-3, 4q-2, 4q-1, 4q.
struct EncodingLayout {
    int n_qubits = 1;

    int n_majoranas() const { return 4 * n_qubits; }
    static int mode(int qubit, int slot) { return 4 * qubit - 4 + slot; }  // slot in 1..4

    /// Z = -i g_a g_b, X = -i g_b g_c, Y = +i g_a g_c. The Y sign is the one
    /// consistent with XY = iZ; -i g_a g_c would give XY = -iZ.
    static MajoranaMonomial letter(int qubit, char l) {
        int a = mode(qubit, 1), b = mode(qubit, 2), c = mode(qubit, 3);
        switch (l) {
            case 'I':
                return {};
            case 'Z':
                return {3, {a, b}};
            case 'X':
                return {3, {b, c}};
            case 'Y':
                return {1, {a, c}};
            default:
                throw InvalidArgument(std::string("unknown Pauli letter '") + l + "'");
        }
    }

    /// The constraint operator g_a g_b g_c g_d (equal to -1 on the code space).
    static MajoranaMonomial constraint(int qubit) {
        return {0, {mode(qubit, 1), mode(qubit, 2), mode(qubit, 3), mode(qubit, 4)}};
    }

    MajoranaMonomial to_monomial(const SignedPauli &p) const {
        MajoranaMonomial m{p.phase, {}};
        for (auto [q, l] : p.letters) {
            detail::require(q >= 1 && q <= n_qubits, "Pauli qubit outside layout");
            m = m * letter(q, l);
        }
        return m;
    }

    /// Inverse of to_monomial on the code space, using g_a g_b g_c g_d = -1.
    /// Throws LeakageError for monomials that do not preserve the code space.
    SignedPauli to_pauli(const MajoranaMonomial &m) const {
        detail::require(m.max_mode() <= n_majoranas(), "monomial outside layout");
        SignedPauli out;
        int phase = m.phase;
        // Modes are sorted and qubit blocks contiguous, so m factors as
        // i^p * m_1 * m_2 * ... with m_q the block-q part in canonical order.
        for (int q = 1; q <= n_qubits; ++q) {
            std::vector<int> block;
            for (int md : m.modes) {
                if ((md + 3) / 4 == q) {
                    block.push_back(md);
                }
            }
            if (block.size() % 2 == 1) {
                throw LeakageError("monomial " + m.to_string() + " leaves logical subspace");
            }
            MajoranaMonomial sub{0, block};
            if (block.size() == 4) {
                phase += 2;
                continue;
            }
            if (block.empty()) {
                continue;
            }
            auto letter_for = [&](const MajoranaMonomial &s) -> std::optional<std::pair<int, char>> {
                // g_a g_b = iZ, g_b g_c = iX, g_a g_c = -iY
                for (char l : {'Z', 'X', 'Y'}) {
                    MajoranaMonomial ref = letter(q, l);
                    if (ref.modes == s.modes) {
                        // s = i^{s.phase} g g, ref = i^{ref.phase} g g
                        return std::make_pair(mod4(s.phase - ref.phase), l);
                    }
                }
                return std::nullopt;
            };
            auto hit = letter_for(sub);
            if (!hit) {
                // sub = -(sub * Q) on the code space; sub * Q is the complement.
                MajoranaMonomial comp = (sub * constraint(q)).negated();
                hit = letter_for(comp);
            }
            phase += hit->first;
            out.letters[q] = hit->second;
        }
        out.phase = mod4(phase);
        return out;
    }
};

/// Conjugates a logical Pauli by a braid word through its Majorana form.
inline SignedPauli pauli_image(const BraidWord &word, const SignedPauli &p, const EncodingLayout &layout) {
    detail::require(word.max_mode() <= layout.n_majoranas(), "braid word acts outside the encoding layout");
    MajoranaMonomial m = layout.to_monomial(p);
    MajoranaMonomial img = braid_conjugate(word, m, layout.n_majoranas());
    try {
        return layout.to_pauli(img);
    } catch (const LeakageError &e) {
        throw NumericalFailure(std::string("internal: braid image ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Braid program text format: one instruction per line,
//   B i j      clockwise exchange
//   Binv i j   anticlockwise exchange
//   M i j      projective measurement of -i g_i g_j
//   # ...      comment (also allowed after an instruction)

struct ProgramInstruction {
    enum class Kind { braid, measure };
    Kind kind = Kind::braid;
    BraidGenerator generator;  // for braids
    int i = 0, j = 0;          // for measurements
    int line = 0;
};

struct BraidProgram {
    std::vector<ProgramInstruction> instructions;

    bool has_measurements() const {
        return std::any_of(instructions.begin(), instructions.end(),
                           [](const auto &ins) { return ins.kind == ProgramInstruction::Kind::measure; });
    }

    BraidWord braid_word() const {
        BraidWord w;
        for (const auto &ins : instructions) {
            if (ins.kind == ProgramInstruction::Kind::braid) {
                w.generators.push_back(ins.generator);
            }
        }
        return w;
    }

    int max_mode() const {
        int m = 0;
        for (const auto &ins : instructions) {
            m = std::max({m, ins.generator.j, ins.i, ins.j});
        }
        return m;
    }
};

class ParseError : public InvalidArgument {
   public:
    ParseError(int line, const std::string &msg)
        : InvalidArgument("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

   private:
    int line_;
};

inline BraidProgram parse_braid_program(std::string_view text) {
    BraidProgram prog;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::string op;
        if (!(ls >> op)) {
            continue;
        }
        long a = 0, b = 0;
        if (!(ls >> a >> b)) {
            throw ParseError(line_no, "expected two mode indices after '" + op + "'");
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError(line_no, "unexpected token '" + extra + "'");
        }
        if (a < 1 || b < 1 || a > 1000 || b > 1000) {
            throw ParseError(line_no, "mode index out of range");
        }
        ProgramInstruction ins;
        ins.line = line_no;
        if (op == "B" || op == "Binv") {
            if (a >= b) {
                throw ParseError(line_no, "braid requires i < j");
            }
            ins.kind = ProgramInstruction::Kind::braid;
            ins.generator = BraidGenerator(static_cast<int>(a), static_cast<int>(b),
                                           op == "B" ? Orientation::clockwise : Orientation::anticlockwise);
        } else if (op == "M") {
            if (a == b) {
                throw ParseError(line_no, "measurement requires distinct modes");
            }
            ins.kind = ProgramInstruction::Kind::measure;
            ins.i = static_cast<int>(a);
            ins.j = static_cast<int>(b);
        } else {
            throw ParseError(line_no, "unknown instruction '" + op + "'");
        }
        prog.instructions.push_back(ins);
    }
    return prog;
}

/// Parses a measurement-free program into a braid word.
inline BraidWord parse_braid_word(std::string_view text) {
    BraidProgram prog = parse_braid_program(text);
    for (const auto &ins : prog.instructions) {
        if (ins.kind != ProgramInstruction::Kind::braid) {
            throw ParseError(ins.line, "measurement not allowed in a braid word");
        }
    }
    return prog.braid_word();
}

inline std::string to_program_text(const BraidWord &w) {
    std::string out;
    for (const auto &g : w.generators) {
        out += g.to_string() + "\n";
    }
    return out;
}

}  // namespace majlab
