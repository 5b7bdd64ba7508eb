#include "nfacount/nfa.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <unordered_map>

namespace nfacount {

namespace {

using nlohmann::json;

StateId lookup(const std::unordered_map<std::string, StateId>& index, const json& name,
               const char* where) {
    if (!name.is_string()) fail("parse", std::string("state name in ") + where + " must be a string");
    auto it = index.find(name.get<std::string>());
    if (it == index.end())
        fail("undeclared-state", "undeclared state '" + name.get<std::string>() + "' in " + where);
    return it->second;
}

std::vector<StateId> id_set(const std::unordered_map<std::string, StateId>& index, const json& arr,
                            const char* field) {
    if (!arr.is_array()) fail("parse", std::string("'") + field + "' must be an array");
    std::set<StateId> ids;
    for (const auto& name : arr) ids.insert(lookup(index, name, field));
    return {ids.begin(), ids.end()};
}

}  // namespace

Nfa parse_nfa(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail("parse", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("parse", "top-level value must be an object");
    for (const char* field : {"states", "initial", "final", "transitions"})
        if (!doc.contains(field)) fail("parse", std::string("missing field '") + field + "'");

    Nfa nfa;
    if (!doc["states"].is_array()) fail("parse", "'states' must be an array");
    std::unordered_map<std::string, StateId> index;
    for (const auto& name : doc["states"]) {
        if (!name.is_string()) fail("parse", "state names must be strings");
        auto s = name.get<std::string>();
        if (!index.emplace(s, static_cast<StateId>(nfa.state_names.size())).second)
            fail("duplicate-state", "duplicate state name '" + s + "'");
        nfa.state_names.push_back(s);
    }

    nfa.initials = id_set(index, doc["initial"], "initial");
    nfa.finals = id_set(index, doc["final"], "final");
    if (nfa.initials.empty()) fail("empty-initials", "at least one initial state is required");
    if (nfa.finals.empty()) fail("empty-finals", "at least one final state is required");

    if (!doc["transitions"].is_array()) fail("parse", "'transitions' must be an array");
    std::set<std::tuple<StateId, uint8_t, StateId>> seen;
    for (const auto& t : doc["transitions"]) {
        if (!t.is_array() || t.size() != 3)
            fail("parse", "each transition must be a [source, symbol, target] triple");
        StateId from = lookup(index, t[0], "transitions");
        if (!t[1].is_number_integer() || (t[1].get<int64_t>() != 0 && t[1].get<int64_t>() != 1))
            fail("bad-symbol", "transition symbols must be the integers 0 or 1");
        auto symbol = static_cast<uint8_t>(t[1].get<int64_t>());
        StateId to = lookup(index, t[2], "transitions");
        if (!seen.emplace(from, symbol, to).second)
            fail("duplicate-transition",
                 "duplicate transition [" + nfa.state_names[from] + ", " + std::to_string(symbol) +
                     ", " + nfa.state_names[to] + "]");
        nfa.transitions.push_back({from, symbol, to});
    }
    return nfa;
}

std::string serialize_nfa(const Nfa& nfa) {
    json doc = json::object();
    doc["states"] = nfa.state_names;
    json initial = json::array(), final_ = json::array();
    for (StateId s : nfa.initials) initial.push_back(nfa.state_names[s]);
    for (StateId s : nfa.finals) final_.push_back(nfa.state_names[s]);
    doc["initial"] = initial;
    doc["final"] = final_;
    json transitions = json::array();
    for (const auto& t : nfa.transitions)
        transitions.push_back({nfa.state_names[t.from], t.symbol, nfa.state_names[t.to]});
    doc["transitions"] = transitions;
    return doc.dump();
}

namespace {

std::string fresh_name(const Nfa& nfa, const std::string& base) {
    std::string name = base;
    while (std::find(nfa.state_names.begin(), nfa.state_names.end(), name) !=
           nfa.state_names.end())
        name += "_";
    return name;
}

}  // namespace

NormalizedNfa normalize(const Nfa& input) {
    bool accepts_empty = false;
    for (StateId s : input.initials)
        if (std::binary_search(input.finals.begin(), input.finals.end(), s)) accepts_empty = true;

    Nfa nfa = input;

    if (nfa.initials.size() > 1) {
        StateId super = nfa.state_count();
        nfa.state_names.push_back(fresh_name(nfa, "__initial"));
        // (super_initial, b, q) exists iff (i, b, q) exists for some original
        // initial i; deduplicated since several initials may share a target.
        std::set<std::pair<uint8_t, StateId>> outgoing;
        for (const auto& t : nfa.transitions)
            if (std::binary_search(input.initials.begin(), input.initials.end(), t.from))
                outgoing.emplace(t.symbol, t.to);
        for (const auto& [symbol, to] : outgoing) nfa.transitions.push_back({super, symbol, to});
        nfa.initials = {super};
    }

    if (nfa.finals.size() > 1) {
        StateId super = nfa.state_count();
        nfa.state_names.push_back(fresh_name(nfa, "__final"));
        std::set<std::pair<StateId, uint8_t>> incoming;
        for (const auto& t : nfa.transitions)
            if (std::binary_search(input.finals.begin(), input.finals.end(), t.to))
                incoming.emplace(t.from, t.symbol);
        for (const auto& [from, symbol] : incoming) nfa.transitions.push_back({from, symbol, super});
        nfa.finals = {super};
    }

    StateId initial = nfa.initials[0];
    StateId final_ = nfa.finals[0];
    return NormalizedNfa{std::move(nfa), initial, final_, accepts_empty};
}

}  // namespace nfacount
