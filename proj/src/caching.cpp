#include "nfacount/caching.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nfacount/exact.hpp"

namespace nfacount {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Reference: return "reference";
        case Scheme::Cache1: return "cache1";
        case Scheme::Cache2: return "cache2";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "reference") return Scheme::Reference;
    if (name == "cache1") return Scheme::Cache1;
    if (name == "cache2") return Scheme::Cache2;
    fail("bad-argument", "unknown scheme '" + name + "'");
}

PrimeCache::PrimeCache(Scheme scheme, const UnrolledNfa& u, uint32_t layer, uint32_t prev_rows)
    : scheme_(scheme), prev_rows_(prev_rows), cols_(u.layer_size(layer)) {
    if (scheme == Scheme::Cache1) {
        bits_[0] = BitMatrix(prev_rows_, cols_);
        bits_[1] = BitMatrix(prev_rows_, cols_);
        return;
    }
    uint32_t max_k = 0;
    for (int b = 0; b < 2; ++b) {
        pred_count_[b].resize(cols_);
        for (uint32_t c = 0; c < cols_; ++c) {
            auto k = static_cast<uint32_t>(u.preds[layer][c].by_symbol[b].size());
            pred_count_[b][c] = k;
            max_k = std::max(max_k, k);
        }
    }
    stride_ = std::max(1u, (max_k + 63) / 64);
    for (int b = 0; b < 2; ++b)
        masks_[b].assign(size_t(prev_rows_) * cols_ * stride_, 0);
}

PrimeCache compute_cache(const UnrolledNfa& u, uint32_t layer, const LayerCache& prev,
                         Scheme scheme, int jobs) {
    if (scheme == Scheme::Reference)
        fail("bad-argument", "the reference scheme keeps no caches");
    const uint32_t prev_rows = prev.pool->size();
    if (prev.bits.rows() != prev_rows || prev.bits.cols() != u.layer_size(layer - 1))
        fail("cache-shape", "previous cache does not match its layer");
    PrimeCache prime(scheme, u, layer, prev_rows);
    const auto cols = static_cast<int64_t>(u.layer_size(layer));

    if (scheme == Scheme::Cache1) {
#pragma omp parallel for schedule(static) if (jobs > 1)
        for (int64_t c = 0; c < cols; ++c) {
            const auto& info = u.preds[layer][static_cast<uint32_t>(c)];
            for (int b = 0; b < 2; ++b) {
                auto& out = prime.block_bits(static_cast<uint8_t>(b)).column(static_cast<uint32_t>(c));
                for (uint32_t pos : info.by_symbol[b]) {
                    const auto& in = prev.bits.column(info.all[pos]);
                    for (size_t wi = 0; wi < out.size(); ++wi) out[wi] |= in[wi];
                }
            }
        }
        return prime;
    }

#pragma omp parallel for schedule(static) if (jobs > 1)
    for (int64_t c = 0; c < cols; ++c) {
        const auto& info = u.preds[layer][static_cast<uint32_t>(c)];
        for (int b = 0; b < 2; ++b) {
            const uint32_t k = prime.pred_count(static_cast<uint8_t>(b), static_cast<uint32_t>(c));
            for (uint32_t rank = 0; rank < k; ++rank) {
                // contribution 2^(k-j) of the j-th b-predecessor, j = rank+1
                const uint32_t bit = k - (rank + 1);
                const auto& in = prev.bits.column(info.all[info.by_symbol[b][rank]]);
                for (uint32_t base = 0; base < in.size(); ++base) {
                    uint64_t chunk = in[base];
                    while (chunk) {
                        uint32_t row = base * 64 + static_cast<uint32_t>(__builtin_ctzll(chunk));
                        chunk &= chunk - 1;
                        prime.mask_mut(static_cast<uint8_t>(b), static_cast<uint32_t>(c), row)[bit >> 6] |=
                            uint64_t(1) << (bit & 63);
                    }
                }
            }
        }
    }
    return prime;
}

LayerCache update_cache(const UnrolledNfa& u, uint32_t layer, const PrimeCache& prime,
                        const WordPool& prev_pool, const WordPool& pool) {
    LayerCache cache;
    cache.pool = &pool;
    cache.bits = BitMatrix(pool.size(), u.layer_size(layer));
    for (uint32_t r = 0; r < pool.size(); ++r) {
        const Word& w = pool.words()[r];
        const uint8_t b = w.bit(w.len - 1);
        const uint32_t prev_row = prev_pool.find(w.truncated(w.len - 1));
        if (prev_row == UINT32_MAX)
            fail("cache-bookkeeping", "sampled word " + w.str() + " has no cache row");
        for (uint32_t c = 0; c < cache.bits.cols(); ++c) {
            bool one;
            if (prime.scheme() == Scheme::Cache1) {
                one = prime.block_bits(b).get(prev_row, c);
            } else {
                const uint64_t* m = prime.mask(b, c, prev_row);
                one = false;
                for (uint32_t wi = 0; wi < prime.stride(); ++wi) one |= m[wi] != 0;
            }
            if (one) cache.bits.set(r, c);
        }
    }
    return cache;
}

uint32_t decode_first_pred(const uint64_t* mask_words, uint32_t stride, uint32_t k) {
    for (uint32_t wi = stride; wi-- > 0;) {
        if (mask_words[wi]) {
            uint32_t high = wi * 64 + (63 - static_cast<uint32_t>(__builtin_clzll(mask_words[wi])));
            return k - high;  // value in [2^(k-j), 2^(k-j+1)) means j = k - high_bit
        }
    }
    return 0;
}

void verify_prime_cache(const UnrolledNfa& u, uint32_t layer, const PrimeCache& prime,
                        const WordPool& prev_pool) {
    for (uint32_t r = 0; r < prev_pool.size(); ++r) {
        const Word& w = prev_pool.words()[r];
        auto prefix_mask = reach_profile(u, w)[w.len];
        for (uint8_t b = 0; b < 2; ++b) {
            Word wb = w.extended(b);
            auto mask = reach_profile(u, wb)[wb.len];
            for (uint32_t c = 0; c < prime.cols(); ++c) {
                const bool expected = mask.test(c);
                if (prime.scheme() == Scheme::Cache1) {
                    if (prime.block_bits(b).get(r, c) != expected)
                        fail("cache-mismatch", "scheme-1 entry disagrees with membership for " +
                                                   wb.str() + " at " + u.state_names[u.layers[layer][c]]);
                    continue;
                }
                const uint64_t* m = prime.mask(b, c, r);
                const uint32_t k = prime.pred_count(b, c);
                const uint32_t decoded = decode_first_pred(m, prime.stride(), k);
                if ((decoded != 0) != expected)
                    fail("cache-mismatch",
                         "scheme-2 entry disagrees with membership for " + wb.str());
                if (!expected) continue;
                // Direct scan: the first b-predecessor accepting the prefix.
                const auto& info = u.preds[layer][c];
                uint32_t want = 0;
                for (uint32_t rank = 0; rank < k; ++rank)
                    if (prefix_mask.test(info.all[info.by_symbol[b][rank]])) {
                        want = rank + 1;
                        break;
                    }
                if (decoded != want)
                    fail("cache-mismatch", "scheme-2 first-predecessor decode disagrees for " +
                                               wb.str());
            }
        }
    }
}

void verify_layer_cache(const UnrolledNfa& u, uint32_t layer, const LayerCache& cache) {
    for (uint32_t r = 0; r < cache.pool->size(); ++r) {
        const Word& w = cache.pool->words()[r];
        auto mask = reach_profile(u, w)[w.len];
        for (uint32_t c = 0; c < cache.bits.cols(); ++c)
            if (cache.bits.get(r, c) != mask.test(c))
                fail("cache-mismatch", "finalized cache disagrees with membership for " + w.str() +
                                           " at " + u.state_names[u.layers[layer][c]]);
    }
}

}  // namespace nfacount
