#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfacount/nfa.hpp"
#include "nfacount/util.hpp"

namespace nfacount {

/// A state of the unrolled automaton, addressed by (layer, dense index).
struct LayerState {
    uint32_t layer;
    uint32_t dense;

    friend bool operator==(const LayerState& a, const LayerState& b) {
        return a.layer == b.layer && a.dense == b.dense;
    }
};

/// Predecessor bookkeeping for one unrolled state. `all` lists every
/// predecessor (over both symbols) exactly once in state order; `by_symbol[b]`
/// gives the positions in `all` that are b-predecessors, also ascending, so
/// the rank of a position within `by_symbol[b]` is the b-predecessor index.
struct PredInfo {
    std::vector<uint32_t> all;  // dense indices into the previous layer
    std::array<std::vector<uint32_t>, 2> by_symbol;
};

/// The (n+1)-layer acyclic form of a normalized NFA. Layer l holds exactly
/// the states reachable by some length-l word, in the source state order;
/// states that cannot reach the final state are kept on purpose.
struct UnrolledNfa {
    uint32_t n = 0;
    uint32_t source_states = 0;               ///< m of the normalized automaton
    std::vector<std::vector<StateId>> layers;  ///< layers[l] = original ids, ascending
    std::vector<std::vector<PredInfo>> preds;  ///< preds[l][dense], l >= 1
    /// succ[l][dense][b]: bit mask over layer l+1 dense indices, l < n.
    std::vector<std::vector<std::array<DynBitset, 2>>> succ;
    std::optional<uint32_t> final_dense;  ///< q_F's dense index in layer n, if reachable
    std::vector<std::string> state_names;

    uint32_t layer_size(uint32_t l) const { return static_cast<uint32_t>(layers[l].size()); }
    const std::string& name_of(LayerState q) const { return state_names[layers[q.layer][q.dense]]; }
};

/// Builds the unrolled automaton in O(n * |T|): one pass per layer over the
/// transitions of reachable sources.
UnrolledNfa unroll(const NormalizedNfa& nfa, uint32_t n);

/// True iff the automaton accepts some word of length n.
bool slice_nonempty(const UnrolledNfa& u);

/// Layers and predecessor lists as JSON (the --dump-unrolled debug output).
std::string dump_unrolled_json(const UnrolledNfa& u);

}  // namespace nfacount
