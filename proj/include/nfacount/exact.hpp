#pragma once

#include <gmpxx.h>

#include <vector>

#include "nfacount/unrolled.hpp"
#include "nfacount/word.hpp"

namespace nfacount {

/// Exact oracles over the unrolled automaton. These are the ground truth the
/// randomized estimator is tested against, so none of them approximate:
/// enumeration and determinization guards are hard errors.

constexpr uint32_t kEnumGuardN = 24;          ///< 2^n enumeration ceiling
constexpr size_t kSubsetGuard = 1u << 20;     ///< determinized-state ceiling

/// Reachable dense-state masks after each prefix of w (|w|+1 layers).
std::vector<DynBitset> reach_profile(const UnrolledNfa& u, const Word& w);

/// True iff w is one of the length-|w| words reaching q; |w| must equal the
/// layer of q.
bool membership(const UnrolledNfa& u, const Word& w, LayerState q);

/// |L_n| by enumerating all 2^n words (n <= kEnumGuardN).
mpz_class count_exact_enum(const UnrolledNfa& u);

/// |L_n| by dynamic programming over reachable state subsets: per layer, a map
/// from exact reachable-set to the number of words inducing it.
mpz_class count_exact_dp(const UnrolledNfa& u);

/// |L(q)| for every layer state, by the same subset DP.
std::vector<std::vector<mpz_class>> count_exact_per_state(const UnrolledNfa& u);

/// The unique accepting run of `word` that reaches q by always entering each
/// state through its first accepting predecessor.
struct DerivationRun {
    Word word;
    std::vector<uint32_t> dense_states;  ///< layer l state at index l, 0..|word|

    LayerState state_at(uint32_t layer) const { return {layer, dense_states[layer]}; }
    LayerState last() const { return state_at(static_cast<uint32_t>(dense_states.size() - 1)); }
};

DerivationRun derivation_run(const UnrolledNfa& u, const Word& w, LayerState q);

/// Deepest state at which the two runs' prefixes (states and symbols)
/// coincide; both runs start at the initial state.
LayerState last_common_prefix_state(const DerivationRun& a, const DerivationRun& b);

/// All length-l words of L(q) for q = (layer, dense); enumeration-guarded.
std::vector<Word> enumerate_language(const UnrolledNfa& u, LayerState q);

/// The divergence class of w at prefix depth l: words of L(q) whose
/// derivation runs share exactly the first l states with w's run.
std::vector<Word> divergence_class(const UnrolledNfa& u, const Word& w, LayerState q, uint32_t l);

}  // namespace nfacount
