#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfacount {

/// Error with a stable machine-readable code (surfaced by the CLI).
struct Error : std::runtime_error {
    std::string code;

    Error(std::string error_code, const std::string& message)
        : std::runtime_error(message), code(std::move(error_code)) {}
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw Error(code, message);
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Fixed-size bit set addressed by dense indices; sized at construction.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(uint32_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    uint32_t size() const { return nbits_; }
    bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(uint32_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset() { std::fill(words_.begin(), words_.end(), 0); }
    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    void or_with(const DynBitset& other) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }

    const std::vector<uint64_t>& words() const { return words_; }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

private:
    uint32_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace nfacount
