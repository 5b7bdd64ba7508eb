#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nfacount/unrolled.hpp"
#include "nfacount/word.hpp"

namespace nfacount {

enum class Scheme { Reference, Cache1, Cache2 };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// The deduplicated pool of words sampled for one layer, in first-insertion
/// order. Row indices of the layer's cache matrices refer to this order.
class WordPool {
public:
    uint32_t insert(const Word& w) {
        auto [it, added] = index_.emplace(w, static_cast<uint32_t>(words_.size()));
        if (added) words_.push_back(w);
        return it->second;
    }

    /// Row of w, or UINT32_MAX when absent.
    uint32_t find(const Word& w) const {
        auto it = index_.find(w);
        return it == index_.end() ? UINT32_MAX : it->second;
    }

    uint32_t size() const { return static_cast<uint32_t>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }

private:
    std::vector<Word> words_;
    std::unordered_map<Word, uint32_t, WordHash> index_;
};

/// A rows x cols 0/1 matrix stored as one bit vector per column, so that the
/// matrix products reduce to ORs of 64-row lanes.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(uint32_t rows, uint32_t cols)
        : rows_(rows), cols_(cols), col_(cols, std::vector<uint64_t>((rows + 63) / 64, 0)) {}

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    bool get(uint32_t r, uint32_t c) const { return (col_[c][r >> 6] >> (r & 63)) & 1u; }
    void set(uint32_t r, uint32_t c) { col_[c][r >> 6] |= uint64_t(1) << (r & 63); }
    const std::vector<uint64_t>& column(uint32_t c) const { return col_[c]; }
    std::vector<uint64_t>& column(uint32_t c) { return col_[c]; }

private:
    uint32_t rows_ = 0;
    uint32_t cols_ = 0;
    std::vector<std::vector<uint64_t>> col_;
};

/// Finalized per-layer membership cache: entry (w, q) = 1 iff w is in L(q),
/// for w in the layer's word pool (rows) and q in the layer (columns).
struct LayerCache {
    const WordPool* pool = nullptr;
    BitMatrix bits;
};

/// The intermediate cache for a layer, with one row per extended word w.b:
/// rows [0, prev_rows) are the words w.0 of the previous pool (in pool
/// order) and rows [prev_rows, 2*prev_rows) the words w.1.
///
/// Scheme 1 entries are membership bits. Scheme 2 entries are predecessor
/// bitmasks over the column's b-predecessors: bit (k-j) is set iff the j-th
/// of k b-predecessors accepts the word's prefix, so the value lies in
/// [2^(k-j), 2^(k-j+1)) exactly when the first accepting predecessor is the
/// j-th. Masks are stored little-endian in 64-bit words (no width limit).
class PrimeCache {
public:
    PrimeCache(Scheme scheme, const UnrolledNfa& u, uint32_t layer, uint32_t prev_rows);

    Scheme scheme() const { return scheme_; }
    uint32_t prev_rows() const { return prev_rows_; }
    uint32_t rows() const { return 2 * prev_rows_; }
    uint32_t cols() const { return cols_; }

    /// Scheme 1 entry (either block addressed by stacked row id).
    bool bit(uint32_t row, uint32_t col) const {
        return bits_[row >= prev_rows_].get(row >= prev_rows_ ? row - prev_rows_ : row, col);
    }
    BitMatrix& block_bits(uint8_t b) { return bits_[b]; }
    const BitMatrix& block_bits(uint8_t b) const { return bits_[b]; }

    /// Scheme 2 entry words for the row of w.b (little-endian mask words).
    const uint64_t* mask(uint8_t b, uint32_t col, uint32_t prev_row) const {
        return masks_[b].data() + (size_t(prev_row) * cols_ + col) * stride_;
    }
    uint64_t* mask_mut(uint8_t b, uint32_t col, uint32_t prev_row) {
        return masks_[b].data() + (size_t(prev_row) * cols_ + col) * stride_;
    }
    uint32_t stride() const { return stride_; }
    uint32_t pred_count(uint8_t b, uint32_t col) const { return pred_count_[b][col]; }

private:
    Scheme scheme_;
    uint32_t prev_rows_ = 0;
    uint32_t cols_ = 0;
    uint32_t stride_ = 0;  // mask words per entry (scheme 2)
    BitMatrix bits_[2];
    std::vector<uint64_t> masks_[2];
    std::vector<uint32_t> pred_count_[2];
};

/// cache'_i from cache_(i-1) via the per-symbol transition products, stacked
/// words-with-0 first. `layer` is i.
PrimeCache compute_cache(const UnrolledNfa& u, uint32_t layer, const LayerCache& prev,
                         Scheme scheme, int jobs);

/// cache_i from cache'_i: keep the rows of the sampled pool and binarize
/// (scheme 2). Every pool word must be an extension of a previous-pool word.
LayerCache update_cache(const UnrolledNfa& u, uint32_t layer, const PrimeCache& prime,
                        const WordPool& prev_pool, const WordPool& pool);

/// Index (1-based) of the first accepting b-predecessor encoded by a scheme-2
/// entry, or 0 when the entry is zero (word not accepted). `k` is the
/// column's b-predecessor count.
uint32_t decode_first_pred(const uint64_t* mask_words, uint32_t stride, uint32_t k);

/// Checks every entry of cache'_layer against a fresh forward simulation, and
/// scheme-2 decoding against a direct predecessor scan.
void verify_prime_cache(const UnrolledNfa& u, uint32_t layer, const PrimeCache& prime,
                        const WordPool& prev_pool);

/// Checks every entry of a finalized cache against membership.
void verify_layer_cache(const UnrolledNfa& u, uint32_t layer, const LayerCache& cache);

}  // namespace nfacount
