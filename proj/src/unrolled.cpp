#include "nfacount/unrolled.hpp"

#include <json.hpp>

#include <algorithm>

#include "nfacount/word.hpp"

namespace nfacount {

UnrolledNfa unroll(const NormalizedNfa& source, uint32_t n) {
    if (n < 1) fail("bad-argument", "unroll requires n >= 1");
    if (n > Word::kMaxLen) fail("guard-exceeded", "word length above " + std::to_string(Word::kMaxLen));

    const Nfa& nfa = source.nfa;
    const uint32_t m = nfa.state_count();

    // Outgoing transitions grouped by source, in (source, declaration) order;
    // appending predecessors while scanning sources in state order keeps every
    // predecessor list sorted.
    std::vector<std::vector<std::pair<uint8_t, StateId>>> out(m);
    for (const auto& t : nfa.transitions) out[t.from].emplace_back(t.symbol, t.to);

    UnrolledNfa u;
    u.n = n;
    u.source_states = m;
    u.state_names = nfa.state_names;
    u.layers.resize(n + 1);
    u.preds.resize(n + 1);
    u.succ.resize(n);
    u.layers[0] = {source.initial};

    std::vector<uint32_t> dense_of(m);  // valid for ids present in the current layer
    for (uint32_t l = 1; l <= n; ++l) {
        const auto& prev = u.layers[l - 1];
        std::vector<bool> reached(m, false);
        for (StateId p : prev)
            for (auto [symbol, to] : out[p]) reached[to] = true;
        auto& layer = u.layers[l];
        for (StateId s = 0; s < m; ++s)
            if (reached[s]) layer.push_back(s);
        for (uint32_t d = 0; d < layer.size(); ++d) dense_of[layer[d]] = d;

        auto& preds = u.preds[l];
        preds.resize(layer.size());
        auto& succ = u.succ[l - 1];
        succ.resize(prev.size());
        for (uint32_t pd = 0; pd < prev.size(); ++pd)
            succ[pd] = {DynBitset(static_cast<uint32_t>(layer.size())),
                        DynBitset(static_cast<uint32_t>(layer.size()))};

        for (uint32_t pd = 0; pd < prev.size(); ++pd) {
            for (auto [symbol, to] : out[prev[pd]]) {
                uint32_t td = dense_of[to];
                succ[pd][symbol].set(td);
                auto& info = preds[td];
                if (info.all.empty() || info.all.back() != pd) info.all.push_back(pd);
                info.by_symbol[symbol].push_back(static_cast<uint32_t>(info.all.size() - 1));
            }
        }
    }

    const auto& last = u.layers[n];
    auto it = std::lower_bound(last.begin(), last.end(), source.final);
    if (it != last.end() && *it == source.final)
        u.final_dense = static_cast<uint32_t>(it - last.begin());
    return u;
}

bool slice_nonempty(const UnrolledNfa& u) { return u.final_dense.has_value(); }

std::string dump_unrolled_json(const UnrolledNfa& u) {
    nlohmann::ordered_json doc;
    doc["n"] = u.n;
    doc["nonempty"] = slice_nonempty(u);
    auto layers = nlohmann::ordered_json::array();
    for (uint32_t l = 0; l <= u.n; ++l) {
        auto layer = nlohmann::ordered_json::array();
        for (uint32_t d = 0; d < u.layer_size(l); ++d) {
            nlohmann::ordered_json s;
            s["state"] = u.state_names[u.layers[l][d]];
            if (l >= 1) {
                for (int b = 0; b < 2; ++b) {
                    auto preds = nlohmann::ordered_json::array();
                    const auto& info = u.preds[l][d];
                    for (uint32_t pos : info.by_symbol[b])
                        preds.push_back(u.state_names[u.layers[l - 1][info.all[pos]]]);
                    s[b == 0 ? "preds0" : "preds1"] = preds;
                }
            }
            layer.push_back(std::move(s));
        }
        layers.push_back(std::move(layer));
    }
    doc["layers"] = std::move(layers);
    return doc.dump();
}

}  // namespace nfacount
