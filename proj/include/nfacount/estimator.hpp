#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "nfacount/caching.hpp"
#include "nfacount/nfa.hpp"
#include "nfacount/prob.hpp"
#include "nfacount/rng.hpp"
#include "nfacount/unrolled.hpp"

namespace nfacount {

/// A replica sample set: distinct words of equal length, all accepted by the
/// owning state, kept in insertion order (the reduce streams consume them in
/// this order, so the order is part of reproducibility).
struct SampleSet {
    std::vector<Word> words;

    size_t size() const { return words.size(); }
    void add(const Word& w) { words.push_back(w); }
};

struct EstimatorParams {
    mpq_class epsilon;
    mpq_class delta;
    mpq_class kappa;   ///< epsilon / (1 + epsilon)
    uint64_t n_s = 0;  ///< replicas per batch
    uint64_t n_t = 0;  ///< batches
    uint64_t n_u = 0;  ///< independent core runs
    mpq_class theta;   ///< global sample-count interrupt threshold

    uint64_t replicas() const { return n_s * n_t; }
};

/// Evaluates the parameter formulas exactly:
///   kappa = e/(1+e)
///   n_s   = ceil(4(n+1)(1+2e)^2(1+e)/e^2)
///   n_t   = ceil(8 ln(16 n m))
///   n_u   = ceil(8 ln(1/delta))        (clamped to >= 1)
///   theta = 16 n_s n_t n (1+kappa) m
/// The logarithms are evaluated with directed rounding so the ceilings are
/// exact. `m` is the state count of the automaton handed to the counter.
EstimatorParams compute_params(const mpq_class& epsilon, const mpq_class& delta, uint32_t n,
                               uint32_t m);

/// Per-state result of estimate_and_sample. `p` approximates 1/|L(q)|;
/// `estimate` is its inverse N(q). rho_hat is kept exactly (it may exceed 1
/// before the min with rho; INF encodes an all-empty median).
struct StateEstimate {
    Prob rho;
    mpq_class rho_hat;
    bool rho_hat_is_inf = false;
    Prob p;
    mpq_class estimate;
    std::vector<mpq_class> batch_means;
};

struct CoreOptions {
    Scheme scheme = Scheme::Cache2;
    int jobs = 1;
    bool capture_sets = false;    ///< keep every S^r(q) in the result
    bool verify_caches = false;   ///< oracle-check each cache after build/update
    bool check_samples = false;   ///< oracle-check every sampled word's membership
};

struct CoreResult {
    mpq_class estimate;
    bool early_zero = false;
    uint64_t total_samples = 0;  ///< final running total (includes the initial state's sets)
    std::vector<std::vector<StateEstimate>> estimates;       ///< [layer][dense]
    std::vector<std::vector<std::vector<SampleSet>>> sets;   ///< [layer][dense][r], if captured
};

/// Keeps each word independently with probability `keep`.
SampleSet reduce(const SampleSet& s, const Prob& keep, RandomStream& stream);

/// Merge of scaled predecessor sets: w.b enters the result iff the
/// contributing predecessor is the first b-predecessor accepting w, resolved
/// against the membership oracle. `scaled` aligns with preds[q].all.
SampleSet union_reference(const UnrolledNfa& u, LayerState q, const std::vector<SampleSet>& scaled);

/// Same contract, membership resolved through the caches.
struct UnionBackend {
    Scheme scheme = Scheme::Reference;
    const LayerCache* prev = nullptr;   // scheme 1 (+ row lookups for scheme 2)
    const PrimeCache* prime = nullptr;  // scheme 2
};

SampleSet union_cached(const UnrolledNfa& u, LayerState q, const std::vector<SampleSet>& scaled,
                       const UnionBackend& backend);

/// One state's estimate-and-sample step. `pred_probs` and `pred_sets` align
/// with preds[q].all; each pred_sets[i] holds the predecessor's replica sets.
std::pair<StateEstimate, std::vector<SampleSet>> estimate_and_sample(
    const UnrolledNfa& u, LayerState q, const std::vector<Prob>& pred_probs,
    const std::vector<const std::vector<SampleSet>*>& pred_sets, const EstimatorParams& params,
    uint64_t master_seed, uint64_t trial, const UnionBackend& backend, const CoreOptions& opt);

/// One full bottom-up pass. Returns N(q_F), or 0 the moment the running
/// sample total reaches theta.
CoreResult count_nfa_core(const UnrolledNfa& u, const EstimatorParams& params,
                          uint64_t master_seed, uint64_t trial, const CoreOptions& opt);

struct CountResult {
    mpq_class estimate;
    std::optional<EstimatorParams> params;  ///< absent for the n = 0 shortcut
    uint32_t cores_run = 0;
    uint32_t early_zero_cores = 0;
    double runtime_ms = 0.0;
};

/// The full counter: normalize, unroll, handle the empty slice and n = 0,
/// then the lower median of n_u independent core runs.
CountResult count_nfa(const Nfa& nfa, uint32_t n, const mpq_class& epsilon,
                      const mpq_class& delta, uint64_t seed, Scheme scheme, int jobs);

/// Double-precision variant: same structure, probabilities and means carried
/// as doubles. Faster, but the (1 +- epsilon) guarantee is not certified.
struct CountResultF {
    double estimate = 0.0;
    std::optional<EstimatorParams> params;
    uint32_t cores_run = 0;
    uint32_t early_zero_cores = 0;
    double runtime_ms = 0.0;
};

CountResultF count_nfa_float(const Nfa& nfa, uint32_t n, const mpq_class& epsilon,
                             const mpq_class& delta, uint64_t seed, Scheme scheme, int jobs);

}  // namespace nfacount
