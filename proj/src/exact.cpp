#include "nfacount/exact.hpp"

#include <map>

namespace nfacount {

std::vector<DynBitset> reach_profile(const UnrolledNfa& u, const Word& w) {
    if (w.len > u.n) fail("bad-argument", "word longer than the unrolling");
    std::vector<DynBitset> profile(w.len + 1);
    profile[0] = DynBitset(1);
    profile[0].set(0);
    for (uint32_t l = 0; l < w.len; ++l) {
        const uint8_t b = w.bit(l);
        DynBitset next(u.layer_size(l + 1));
        const auto& succ = u.succ[l];
        const auto& words = profile[l].words();
        for (uint32_t base = 0; base < words.size(); ++base) {
            uint64_t chunk = words[base];
            while (chunk) {
                uint32_t d = base * 64 + static_cast<uint32_t>(__builtin_ctzll(chunk));
                chunk &= chunk - 1;
                next.or_with(succ[d][b]);
            }
        }
        profile[l + 1] = std::move(next);
    }
    return profile;
}

bool membership(const UnrolledNfa& u, const Word& w, LayerState q) {
    if (w.len != q.layer) fail("bad-argument", "membership needs |w| equal to the state's layer");
    return reach_profile(u, w)[q.layer].test(q.dense);
}

namespace {

/// Depth-first enumeration sharing prefix reach sets; calls f(word, mask at
/// depth n) for every word of length u.n with a non-empty reachable set.
template <typename F>
void for_each_word(const UnrolledNfa& u, F&& f) {
    std::vector<DynBitset> stack(u.n + 1);
    stack[0] = DynBitset(1);
    stack[0].set(0);
    Word w;
    // Iterative DFS over the binary tree of words.
    struct Frame {
        uint8_t next_symbol;
    };
    std::vector<Frame> frames(u.n + 1, Frame{0});
    uint32_t depth = 0;
    for (;;) {
        if (depth == u.n) {
            f(static_cast<const Word&>(w), stack[depth]);
            if (depth == 0) return;
            --depth;
            continue;
        }
        uint8_t b = frames[depth].next_symbol;
        if (b > 1) {
            frames[depth].next_symbol = 0;
            if (depth == 0) return;
            --depth;
            continue;
        }
        frames[depth].next_symbol = static_cast<uint8_t>(b + 1);
        DynBitset next(u.layer_size(depth + 1));
        const auto& words = stack[depth].words();
        for (uint32_t base = 0; base < words.size(); ++base) {
            uint64_t chunk = words[base];
            while (chunk) {
                uint32_t d = base * 64 + static_cast<uint32_t>(__builtin_ctzll(chunk));
                chunk &= chunk - 1;
                next.or_with(u.succ[depth][d][b]);
            }
        }
        if (!next.any()) continue;  // dead prefix
        w = w.truncated(depth).extended(b);
        stack[depth + 1] = std::move(next);
        ++depth;
    }
}

void check_enum_guard(const UnrolledNfa& u) {
    if (u.n > kEnumGuardN)
        fail("guard-exceeded",
             "enumeration over 2^" + std::to_string(u.n) + " words refused (limit n <= " +
                 std::to_string(kEnumGuardN) + ")");
}

}  // namespace

mpz_class count_exact_enum(const UnrolledNfa& u) {
    check_enum_guard(u);
    if (!u.final_dense) return 0;
    const uint32_t fd = *u.final_dense;
    unsigned long count = 0;
    for_each_word(u, [&](const Word&, const DynBitset& mask) { count += mask.test(fd); });
    return mpz_class(count);
}

mpz_class count_exact_dp(const UnrolledNfa& u) {
    if (!u.final_dense) return 0;
    const uint32_t fd = *u.final_dense;
    using Key = std::vector<uint64_t>;
    std::map<Key, mpz_class> cur;
    {
        DynBitset init(1);
        init.set(0);
        cur.emplace(init.words(), 1);
    }
    size_t subsets_seen = 1;
    for (uint32_t l = 0; l < u.n; ++l) {
        std::map<Key, mpz_class> next;
        for (const auto& [key, count] : cur) {
            for (uint8_t b = 0; b < 2; ++b) {
                DynBitset mask(u.layer_size(l + 1));
                for (uint32_t base = 0; base < key.size(); ++base) {
                    uint64_t chunk = key[base];
                    while (chunk) {
                        uint32_t d = base * 64 + static_cast<uint32_t>(__builtin_ctzll(chunk));
                        chunk &= chunk - 1;
                        mask.or_with(u.succ[l][d][b]);
                    }
                }
                if (!mask.any()) continue;
                next[mask.words()] += count;
            }
        }
        subsets_seen += next.size();
        if (subsets_seen > kSubsetGuard)
            fail("guard-exceeded", "determinized subset count above the guard");
        cur = std::move(next);
    }
    mpz_class total = 0;
    for (const auto& [key, count] : cur)
        if ((key[fd >> 6] >> (fd & 63)) & 1u) total += count;
    return total;
}

std::vector<std::vector<mpz_class>> count_exact_per_state(const UnrolledNfa& u) {
    std::vector<std::vector<mpz_class>> counts(u.n + 1);
    for (uint32_t l = 0; l <= u.n; ++l) counts[l].assign(u.layer_size(l), 0);
    counts[0][0] = 1;

    using Key = std::vector<uint64_t>;
    std::map<Key, mpz_class> cur;
    {
        DynBitset init(1);
        init.set(0);
        cur.emplace(init.words(), 1);
    }
    size_t subsets_seen = 1;
    for (uint32_t l = 0; l < u.n; ++l) {
        std::map<Key, mpz_class> next;
        for (const auto& [key, count] : cur) {
            for (uint8_t b = 0; b < 2; ++b) {
                DynBitset mask(u.layer_size(l + 1));
                for (uint32_t base = 0; base < key.size(); ++base) {
                    uint64_t chunk = key[base];
                    while (chunk) {
                        uint32_t d = base * 64 + static_cast<uint32_t>(__builtin_ctzll(chunk));
                        chunk &= chunk - 1;
                        mask.or_with(u.succ[l][d][b]);
                    }
                }
                if (!mask.any()) continue;
                next[mask.words()] += count;
            }
        }
        subsets_seen += next.size();
        if (subsets_seen > kSubsetGuard)
            fail("guard-exceeded", "determinized subset count above the guard");
        for (const auto& [key, count] : next)
            for (uint32_t base = 0; base < key.size(); ++base) {
                uint64_t chunk = key[base];
                while (chunk) {
                    uint32_t d = base * 64 + static_cast<uint32_t>(__builtin_ctzll(chunk));
                    chunk &= chunk - 1;
                    counts[l + 1][d] += count;
                }
            }
        cur = std::move(next);
    }
    return counts;
}

DerivationRun derivation_run(const UnrolledNfa& u, const Word& w, LayerState q) {
    auto profile = reach_profile(u, w);
    if (!profile[q.layer].test(q.dense))
        fail("not-accepted", "word " + w.str() + " is not accepted by the state");
    DerivationRun run;
    run.word = w;
    run.dense_states.assign(q.layer + 1, 0);
    run.dense_states[q.layer] = q.dense;
    // Walk backwards; the first b-predecessor accepting the prefix is the
    // first predecessor inside the prefix's reachable set.
    for (uint32_t l = q.layer; l >= 1; --l) {
        const uint8_t b = w.bit(l - 1);
        const auto& info = u.preds[l][run.dense_states[l]];
        bool found = false;
        for (uint32_t pos : info.by_symbol[b]) {
            uint32_t pd = info.all[pos];
            if (profile[l - 1].test(pd)) {
                run.dense_states[l - 1] = pd;
                found = true;
                break;
            }
        }
        if (!found) fail("internal", "reachable state without an accepting predecessor");
    }
    return run;
}

LayerState last_common_prefix_state(const DerivationRun& a, const DerivationRun& b) {
    if (a.dense_states[0] != b.dense_states[0])
        fail("bad-argument", "runs must start at the initial state");
    uint32_t k = 0;
    const uint32_t limit =
        static_cast<uint32_t>(std::min(a.dense_states.size(), b.dense_states.size()) - 1);
    while (k < limit && a.dense_states[k + 1] == b.dense_states[k + 1] &&
           a.word.bit(k) == b.word.bit(k))
        ++k;
    return {k, a.dense_states[k]};
}

std::vector<Word> enumerate_language(const UnrolledNfa& u, LayerState q) {
    if (q.layer > kEnumGuardN)
        fail("guard-exceeded", "language enumeration above the 2^n guard");
    // Enumerate words level by level, keeping only prefixes that stay alive.
    std::vector<std::pair<Word, DynBitset>> frontier;
    DynBitset init(1);
    init.set(0);
    frontier.emplace_back(Word::empty(), init);
    for (uint32_t l = 0; l < q.layer; ++l) {
        std::vector<std::pair<Word, DynBitset>> next;
        for (const auto& [w, mask] : frontier) {
            for (uint8_t b = 0; b < 2; ++b) {
                DynBitset m(u.layer_size(l + 1));
                const auto& words = mask.words();
                for (uint32_t base = 0; base < words.size(); ++base) {
                    uint64_t chunk = words[base];
                    while (chunk) {
                        uint32_t d = base * 64 + static_cast<uint32_t>(__builtin_ctzll(chunk));
                        chunk &= chunk - 1;
                        m.or_with(u.succ[l][d][b]);
                    }
                }
                if (m.any()) next.emplace_back(w.extended(b), std::move(m));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Word> result;
    for (const auto& [w, mask] : frontier)
        if (mask.test(q.dense)) result.push_back(w);
    return result;
}

std::vector<Word> divergence_class(const UnrolledNfa& u, const Word& w, LayerState q, uint32_t l) {
    if (l > q.layer) fail("bad-argument", "prefix depth beyond the state's layer");
    DerivationRun base = derivation_run(u, w, q);
    std::vector<Word> result;
    for (const Word& other : enumerate_language(u, q)) {
        DerivationRun run = derivation_run(u, other, q);
        LayerState meet = last_common_prefix_state(base, run);
        if (meet.layer == l) result.push_back(other);
    }
    return result;
}

}  // namespace nfacount
