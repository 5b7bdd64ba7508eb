#include "nfacount/rng.hpp"

#include <cassert>

namespace nfacount {

static_assert(GMP_LIMB_BITS == 64, "64-bit limbs expected");

namespace {

constexpr uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<uint64_t>(p >> 64);
    lo = static_cast<uint64_t>(p);
}

std::array<uint64_t, 4> philox_block(std::array<uint64_t, 2> key, std::array<uint64_t, 4> ctr) {
    for (int round = 0; round < 10; ++round) {
        uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

}  // namespace

RandomStream::RandomStream(uint64_t master_seed, const StreamKey& key) {
    assert(key.sub < (1u << 24));
    key_ = {splitmix64(master_seed), splitmix64(master_seed ^ 0x6A09E667F3BCC909ULL)};
    ctr_ = {(uint64_t(key.layer) << 32) | key.state,
            (uint64_t(key.phase) << 56) | (uint64_t(key.sub) << 32) | key.replica,
            key.trial,
            0};
}

void RandomStream::refill() {
    buf_ = philox_block(key_, ctr_);
    ++ctr_[3];
    pos_ = 0;
}

uint64_t RandomStream::next_u64() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
}

uint64_t RandomStream::below(uint64_t bound) {
    assert(bound > 0);
    if (bound == 1) return 0;
    uint64_t mask = ~uint64_t(0) >> __builtin_clzll(bound - 1);
    for (;;) {
        uint64_t v = next_u64() & mask;
        if (v < bound) return v;
    }
}

bool RandomStream::bernoulli(const Prob& p) {
    if (p.is_inf()) fail("prob-inf", "bernoulli with INF probability");
    if (p.is_zero()) return false;
    if (p.is_one()) return true;

    const mpq_class& v = p.value();
    mpz_srcptr num = v.get_num().get_mpz_t();
    mpz_srcptr den = v.get_den().get_mpz_t();
    const size_t nd = mpz_size(den);
    const size_t nn = mpz_size(num);
    const mp_limb_t* dl = mpz_limbs_read(den);
    const mp_limb_t* nl = mpz_limbs_read(num);
    const size_t bits = mpz_sizeinbase(den, 2);
    const unsigned top = static_cast<unsigned>((bits - 1) % 64) + 1;
    const mp_limb_t top_mask = top == 64 ? ~mp_limb_t(0) : ((mp_limb_t(1) << top) - 1);

    if (scratch_.size() < nd) scratch_.resize(nd);
    mp_limb_t* u = scratch_.data();
    for (;;) {
        for (size_t i = 0; i < nd; ++i) u[i] = next_u64();
        u[nd - 1] &= top_mask;
        if (mpn_cmp(u, dl, nd) >= 0) continue;  // rejected: not uniform below den
        for (size_t i = nd; i-- > nn;)
            if (u[i]) return false;  // u has a limb above num's width
        return mpn_cmp(u, nl, nn) < 0;
    }
}

}  // namespace nfacount
