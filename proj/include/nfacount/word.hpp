#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "nfacount/util.hpp"

namespace nfacount {

/// A bit-packed binary word of length <= 128. Bit i is the (i+1)-th symbol.
struct Word {
    uint64_t lo = 0;
    uint64_t hi = 0;
    uint8_t len = 0;

    static constexpr uint32_t kMaxLen = 128;

    static Word empty() { return Word{}; }

    uint8_t bit(uint32_t i) const {
        return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
    }

    /// Returns this word extended by one symbol; the prefix is shared.
    Word extended(uint8_t symbol) const {
        Word w = *this;
        if (symbol) {
            if (len < 64)
                w.lo |= uint64_t(1) << len;
            else
                w.hi |= uint64_t(1) << (len - 64);
        }
        w.len = static_cast<uint8_t>(len + 1);
        return w;
    }

    /// Prefix of the given length, with bits beyond it cleared.
    Word truncated(uint32_t new_len) const {
        Word w = *this;
        w.len = static_cast<uint8_t>(new_len);
        if (new_len < 64) {
            w.lo &= new_len == 0 ? 0 : (~uint64_t(0) >> (64 - new_len));
            w.hi = 0;
        } else if (new_len < 128) {
            w.hi &= new_len == 64 ? 0 : (~uint64_t(0) >> (128 - new_len));
        }
        return w;
    }

    std::string str() const {
        std::string s(len, '0');
        for (uint32_t i = 0; i < len; ++i) s[i] = bit(i) ? '1' : '0';
        return s;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.len == b.len && a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    /// Lexicographic-by-bits ordering among equal lengths; shorter first.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.len != b.len) return a.len < b.len;
        if (a.hi != b.hi) return a.hi < b.hi;
        return a.lo < b.lo;
    }
};

struct WordHash {
    size_t operator()(const Word& w) const {
        uint64_t h = splitmix64(w.lo ^ (uint64_t(w.len) << 56));
        return splitmix64(h ^ w.hi);
    }
};

}  // namespace nfacount
