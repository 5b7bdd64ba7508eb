#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "nfacount/prob.hpp"

namespace nfacount {

/// Identifies one logical random stream. Streams with different keys are
/// independent regardless of thread scheduling, which is what makes runs
/// reproducible under any --jobs setting.
struct StreamKey {
    uint64_t trial = 0;    ///< outer repetition index
    uint32_t layer = 0;
    uint32_t state = 0;    ///< dense index within the layer
    uint32_t replica = 0;  ///< sample-set replica r
    uint8_t phase = 0;
    uint32_t sub = 0;      ///< e.g. predecessor position; < 2^24
};

namespace phase {
constexpr uint8_t kReducePred = 1;   ///< normalizing predecessor sets
constexpr uint8_t kReduceFinal = 2;  ///< thinning merged sets to p(q)
constexpr uint8_t kHarness = 3;      ///< instance generation
constexpr uint8_t kGeneric = 4;
}  // namespace phase

/// Counter-based keyed generator (Philox4x64-10). The key is derived from the
/// master seed; the stream key occupies the counter prefix and sequential
/// draws advance the final counter word.
class RandomStream {
public:
    RandomStream(uint64_t master_seed, const StreamKey& key);

    uint64_t next_u64();

    /// Uniform draw in [0, bound), bound > 0.
    uint64_t below(uint64_t bound);

    /// Exact Bernoulli draw: true with probability num/den, via rejection
    /// sampling of a uniform integer in [0, den). p in {0,1} consumes no
    /// randomness.
    bool bernoulli(const Prob& p);

private:
    void refill();

    std::array<uint64_t, 2> key_;
    std::array<uint64_t, 4> ctr_;
    std::array<uint64_t, 4> buf_;
    uint32_t pos_ = 4;
    std::vector<mp_limb_t> scratch_;
};

}  // namespace nfacount
