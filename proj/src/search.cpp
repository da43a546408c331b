#include "mcc/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>

#include <omp.h>

#include "mcc/errors.hpp"

namespace mcc {

uint64_t SplitMix64::below(uint64_t n) {
    if (n == 0) throw ParameterError("SplitMix64::below: empty range");
    if ((n & (n - 1)) == 0) return next() & (n - 1);
    const uint64_t mask = ~uint64_t(0) >> std::countl_zero(n - 1);
    for (;;) {
        const uint64_t r = next() & mask;
        if (r < n) return r;
    }
}

BigInt SplitMix64::below_big(const BigInt& n) {
    if (n <= 0) throw ParameterError("SplitMix64::below_big: empty range");
    if (n <= std::numeric_limits<uint64_t>::max()) return BigInt(below(n.convert_to<uint64_t>()));
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const uint64_t top_mask =
        top_bits == 64 ? ~uint64_t(0) : ((uint64_t(1) << top_bits) - 1);
    for (;;) {
        BigInt r = 0;
        for (unsigned w = 0; w < words; ++w) {
            uint64_t chunk = next();
            if (w + 1 == words) chunk &= top_mask;
            r |= BigInt(chunk) << (64 * w);
        }
        if (r < n) return r;
    }
}

SamplerContext make_sampler(const GroupParams& params, uint64_t factor_bound) {
    if (params.regime != Regime::Counting)
        throw ParameterError("make_sampler: counting regime required");
    SamplerContext ctx;
    ctx.params = params;
    ctx.sf = split(params.q, params.m);
    ctx.scalars = scalar_solutions(params.q, params.s);
    auto gen = find_field_generator(ctx.sf, factor_bound);
    if (!gen)
        throw CapacityError("make_sampler: could not factor Q - 1 within bound");
    const BigInt t = subfield_power(ctx.sf, params.s);
    ctx.gen_pow = field_pow(*gen, t - 1, ctx.sf);
    ctx.subgroup_order = norm_one_order(ctx.sf, params.s);
    return ctx;
}

RingElement sample_a1(const SamplerContext& ctx, SplitMix64& rng) {
    CrtImage img;
    img.q = ctx.params.q;
    img.m = ctx.params.m;
    img.scalar = ctx.scalars[rng.below(ctx.scalars.size())];
    const BigInt k = rng.below_big(ctx.subgroup_order);
    img.field_part = field_pow(ctx.gen_pow, k, ctx.sf);
    return crt_recombine(img, ctx.sf);
}

SearchReport expurgated_search(const GroupParams& params, const SearchOptions& opts) {
    if (opts.trials == 0) throw ParameterError("expurgated_search: trials must be positive");
    const SamplerContext ctx = make_sampler(params);

    struct Trial {
        uint32_t d = 0;
        std::vector<uint32_t> a1;
    };
    std::vector<Trial> trials(opts.trials);

    DistanceOptions inner = opts.distance;
    inner.threads = 1;  // parallelism lives at the trial level

    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int64_t i = 0; i < int64_t(opts.trials); ++i) {
        SplitMix64 rng = SplitMix64::for_trial(opts.seed, uint64_t(i));
        const RingElement a1 = sample_a1(ctx, rng);
        const MetacyclicCode code = build_code(params, a1);
        trials[i].d = min_distance_rows(code.generator, inner).d_min;
        trials[i].a1 = a1.c;
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < trials.size(); ++i) {
        if (trials[i].d > trials[best].d ||
            (trials[i].d == trials[best].d && trials[i].a1 < trials[best].a1))
            best = i;
    }
    std::vector<std::vector<uint32_t>> sampled;
    sampled.reserve(trials.size());
    for (const auto& t : trials) sampled.push_back(t.a1);
    std::sort(sampled.begin(), sampled.end());
    sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());

    SearchReport rep;
    rep.params = params;
    rep.trials = opts.trials;
    rep.seed = opts.seed;
    rep.target_d = opts.target_d;
    RingElement best_a1 = RingElement::zero(params.q, params.m);
    best_a1.c = trials[best].a1;
    rep.best = build_code(params, best_a1);
    rep.best_distance = min_distance(rep.best, opts.distance);
    rep.achieved = rep.best_distance.d_min >= opts.target_d;
    rep.distinct_a1_sampled = sampled.size();
    return rep;
}

namespace {

struct KeyCollector {
    bool wide = false;
    std::vector<uint64_t> narrow_keys;
    std::vector<std::string> wide_keys;

    void reserve(std::size_t n) {
        if (wide)
            wide_keys.reserve(n);
        else
            narrow_keys.reserve(n);
    }
};

void collect_code_keys(const MetacyclicCode& code, bool weight_filter, unsigned bits_per,
                       KeyCollector& out) {
    const GfMatrix& G = code.generator;
    const uint32_t q = G.q;
    const std::size_t m = G.rows, n = G.cols;
    const uint64_t total = big_pow(BigInt(q), uint64_t(m)).convert_to<uint64_t>();
    const uint32_t max_wt = weight_filter ? code.params.m : UINT32_MAX;

    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rows(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (G.at(i, c) != 0) rows[i].push_back({uint32_t(c), G.at(i, c)});

    std::vector<uint32_t> word(n, 0);
    uint32_t wt = 0;
    for (uint64_t k = 1; k < total; ++k) {
        uint64_t kk = k;
        std::size_t j = 0;
        while (kk % q == 0) {
            kk /= q;
            ++j;
        }
        for (auto [col, val] : rows[j]) {
            const uint32_t old = word[col];
            uint32_t nv = old + val;
            if (nv >= q) nv -= q;
            word[col] = nv;
            wt += (nv != 0) - (old != 0);
        }
        if (wt == 0 || wt >= max_wt) continue;
        if (!out.wide) {
            uint64_t key = 0;
            for (std::size_t c = 0; c < n; ++c) key = (key << bits_per) | word[c];
            out.narrow_keys.push_back(key);
        } else {
            std::string key(n, '\0');
            for (std::size_t c = 0; c < n; ++c) key[c] = char(word[c]);
            out.wide_keys.push_back(std::move(key));
        }
    }
}

template <class Key>
void tally(std::vector<Key>& keys, CoverReport& rep) {
    std::sort(keys.begin(), keys.end());
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        const uint32_t mult = uint32_t(j - i);
        ++rep.histogram[mult];
        rep.max_multiplicity = std::max(rep.max_multiplicity, mult);
        ++rep.vectors;
        i = j;
    }
}

CoverReport cover_impl(const GroupParams& params, const CoverOptions& opts, bool parallel) {
    if (params.regime != Regime::Counting)
        throw ParameterError("cover_multiplicity: counting regime required");
    const BigInt count = omega(params).value;
    const BigInt space = big_pow(BigInt(params.q), params.m);
    if (count * space > opts.bound)
        throw CapacityError("cover_multiplicity: omega * q^m exceeds the bound");

    const auto a1s = enumerate_valid(params, opts.enumerate);
    const unsigned bits_per = std::bit_width(params.q - 1);
    const bool wide = bits_per * std::size_t(params.n()) > 64;

    const int threads =
        parallel ? (opts.threads > 0 ? opts.threads : omp_get_max_threads()) : 1;
    std::vector<KeyCollector> parts(threads);
    for (auto& p : parts) p.wide = wide;

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (parallel)
    for (int64_t i = 0; i < int64_t(a1s.size()); ++i) {
        const MetacyclicCode code = build_code(params, a1s[i]);
        collect_code_keys(code, opts.weight_filter, bits_per, parts[omp_get_thread_num()]);
    }

    CoverReport rep;
    rep.codes = count;
    rep.weight_filter = opts.weight_filter;
    if (!wide) {
        std::vector<uint64_t> all;
        for (auto& p : parts) all.insert(all.end(), p.narrow_keys.begin(), p.narrow_keys.end());
        tally(all, rep);
    } else {
        std::vector<std::string> all;
        for (auto& p : parts)
            for (auto& k : p.wide_keys) all.push_back(std::move(k));
        tally(all, rep);
    }
    rep.within_bound = rep.max_multiplicity <= params.q;
    return rep;
}

}  // namespace

CoverReport cover_multiplicity(const GroupParams& params, const CoverOptions& opts) {
    return cover_impl(params, opts, true);
}

// Independent reference: positional order, ring products, tree-map tally.
CoverReport cover_multiplicity_serial(const GroupParams& params, const CoverOptions& opts) {
    if (params.regime != Regime::Counting)
        throw ParameterError("cover_multiplicity_serial: counting regime required");
    const BigInt count = omega(params).value;
    const BigInt space = big_pow(BigInt(params.q), params.m);
    if (count * space > opts.bound)
        throw CapacityError("cover_multiplicity_serial: omega * q^m exceeds the bound");

    const auto a1s = enumerate_bruteforce_serial(params);
    const uint64_t total = space.convert_to<uint64_t>();
    std::map<std::vector<uint32_t>, uint32_t> seen;
    for (const auto& a1 : a1s) {
        const MetacyclicCode code = build_code(params, a1);
        for (uint64_t k = 1; k < total; ++k) {
            const RingElement f = from_lex_rank(params.q, params.m, k);
            std::vector<RingElement> blocks{f};
            for (const auto& aj : code.a) blocks.push_back(ring_mul(f, aj));
            const Codeword w = Codeword::from_blocks(blocks);
            const uint32_t wt = w.weight();
            if (wt == 0 || (opts.weight_filter && wt >= params.m)) continue;
            ++seen[w.v];
        }
    }
    CoverReport rep;
    rep.codes = count;
    rep.weight_filter = opts.weight_filter;
    for (const auto& [vec, mult] : seen) {
        (void)vec;
        ++rep.histogram[mult];
        rep.max_multiplicity = std::max(rep.max_multiplicity, mult);
        ++rep.vectors;
    }
    rep.within_bound = rep.max_multiplicity <= params.q;
    return rep;
}

}  // namespace mcc
