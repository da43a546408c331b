#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mcc/bigint.hpp"
#include "mcc/code.hpp"
#include "mcc/crt.hpp"
#include "mcc/distance.hpp"
#include "mcc/enumerate.hpp"

namespace mcc {

// Keyed generator: fixed increment, two xor-multiply finalizer rounds.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Trial i draws from a stream whose state is seed xor splitmix64(i), so
    // results never depend on how trials land on workers.
    static SplitMix64 for_trial(uint64_t seed, uint64_t trial) {
        SplitMix64 key(trial);
        return SplitMix64(seed ^ key.next());
    }

    uint64_t below(uint64_t n);     // uniform in [0, n), rejection sampled
    BigInt below_big(const BigInt& n);
};

// Everything fixed that uniform draws over the valid a_1 set need.
struct SamplerContext {
    GroupParams params;
    SplitFactors sf;
    std::vector<uint32_t> scalars;  // z^s = 1 in F_q
    FieldElem gen_pow;              // g^(t-1), generates the norm-one subgroup
    BigInt subgroup_order;          // (t^s - 1)/(t - 1)
};

SamplerContext make_sampler(const GroupParams& params, uint64_t factor_bound = 1'000'000);

// One uniform draw: scalar root of unity first, subgroup exponent second.
RingElement sample_a1(const SamplerContext& ctx, SplitMix64& rng);

struct SearchOptions {
    uint64_t trials = 0;
    uint32_t target_d = 0;
    uint64_t seed = 0;
    int threads = 0;
    DistanceOptions distance;
};

struct SearchReport {
    GroupParams params;
    uint64_t trials = 0, seed = 0;
    uint32_t target_d = 0;
    MetacyclicCode best;
    DistanceResult best_distance;
    bool achieved = false;
    uint64_t distinct_a1_sampled = 0;
};

// Draw `trials` codes, keep the best minimum distance. Deterministic for a
// fixed seed whatever the worker count; ties break toward the smaller a_1.
SearchReport expurgated_search(const GroupParams& params, const SearchOptions& opts);

struct CoverOptions {
    BigInt bound = BigInt(1) << 26;  // cap on omega * q^m
    bool weight_filter = true;       // keep only weights in (0, m)
    int threads = 0;
    EnumerateOptions enumerate;
};

struct CoverReport {
    uint32_t max_multiplicity = 0;
    std::map<uint32_t, uint64_t> histogram;  // multiplicity -> distinct vectors
    uint64_t vectors = 0;                    // distinct vectors seen
    BigInt codes;                            // codes enumerated
    bool weight_filter = true;
    bool within_bound = false;               // max_multiplicity <= q
};

// How many codes share any single low-weight vector, across the whole family.
CoverReport cover_multiplicity(const GroupParams& params, const CoverOptions& opts = {});
CoverReport cover_multiplicity_serial(const GroupParams& params, const CoverOptions& opts = {});

}  // namespace mcc
