#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfacount/util.hpp"

namespace nfacount {

using StateId = uint32_t;

/// One of the two input symbols.
struct Symbol {
    uint8_t value;  // 0 or 1
};

struct Transition {
    StateId from;
    uint8_t symbol;
    StateId to;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.from == b.from && a.symbol == b.symbol && a.to == b.to;
    }
};

/// An NFA over {0,1}. The order of `state_names` is the total state order
/// used everywhere downstream (derivation runs depend on it), so it is
/// preserved exactly from the input file.
struct Nfa {
    std::vector<std::string> state_names;
    std::vector<StateId> initials;  // non-empty, ascending
    std::vector<StateId> finals;    // non-empty, ascending
    std::vector<Transition> transitions;

    uint32_t state_count() const { return static_cast<uint32_t>(state_names.size()); }

    friend bool operator==(const Nfa& a, const Nfa& b) {
        return a.state_names == b.state_names && a.initials == b.initials &&
               a.finals == b.finals && a.transitions == b.transitions;
    }
};

/// An NFA with exactly one initial and one final state. Word counts agree
/// with the source automaton for every n >= 1; the n = 0 answer is carried
/// separately since the construction does not preserve it.
struct NormalizedNfa {
    Nfa nfa;
    StateId initial;
    StateId final;
    bool accepts_empty_word;
};

/// Parses the JSON automaton format:
///   {"states": ["q0", ...], "initial": ["q0"], "final": ["qF"],
///    "transitions": [["q0", 0, "q1"], ...]}
/// States keep file order; duplicate transitions are rejected.
Nfa parse_nfa(const std::string& text);

std::string serialize_nfa(const Nfa& nfa);

/// Collapses multiple finals into a fresh super-final that receives a copy of
/// every transition into any original final; multiple initials are handled
/// symmetrically. Fresh states are appended after the originals. An
/// already-normalized automaton is returned unchanged.
NormalizedNfa normalize(const Nfa& nfa);

}  // namespace nfacount
