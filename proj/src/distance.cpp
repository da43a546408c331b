#include "mcc/distance.hpp"

#include <algorithm>

#include <omp.h>

#include "mcc/bigint.hpp"
#include "mcc/errors.hpp"

namespace mcc {

namespace {

struct SparseRow {
    std::vector<std::pair<uint32_t, uint32_t>> nz;  // (column, value)
};

// Digits of k base q, then f_i = (d_i - d_{i+1}) mod q: the word visited at
// step k of the modular Gray walk, where step k increments digit v_q(k).
std::vector<uint32_t> gray_decode(uint64_t k, uint32_t q, std::size_t m) {
    std::vector<uint32_t> digits(m + 1, 0);
    for (std::size_t i = 0; i < m && k; ++i) {
        digits[i] = uint32_t(k % q);
        k /= q;
    }
    std::vector<uint32_t> f(m);
    for (std::size_t i = 0; i < m; ++i)
        f[i] = (digits[i] + q - digits[i + 1]) % q;
    return f;
}

struct Best {
    uint32_t wt = UINT32_MAX;
    uint64_t rank = 0;
};

}  // namespace

RowsDistanceResult min_distance_rows(const GfMatrix& gen, const DistanceOptions& opts) {
    const uint32_t q = gen.q;
    const std::size_t m = gen.rows, n = gen.cols;
    if (m == 0 || n == 0) throw ParameterError("min_distance_rows: empty generator");

    const BigInt total_big = big_pow(BigInt(q), uint64_t(m));
    if (!opts.override_guard && total_big > opts.guard)
        throw CapacityError("min_distance_rows: q^m exceeds the enumeration guard");
    if (total_big > (BigInt(1) << 62))
        throw CapacityError("min_distance_rows: q^m exceeds iteration capacity");
    const uint64_t total = total_big.convert_to<uint64_t>();

    std::vector<SparseRow> rows(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (gen.at(i, c) != 0) rows[i].nz.push_back({uint32_t(c), gen.at(i, c)});

    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
    std::vector<Best> best(threads);

#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        const uint64_t lo = 1 + (total - 1) * uint64_t(tid) / uint64_t(threads);
        const uint64_t hi = 1 + (total - 1) * uint64_t(tid + 1) / uint64_t(threads);

        std::vector<uint32_t> word(n, 0);
        const std::vector<uint32_t> f = gray_decode(lo, q, m);
        for (std::size_t i = 0; i < m; ++i)
            if (f[i])
                for (auto [col, val] : rows[i].nz)
                    word[col] = uint32_t((word[col] + uint64_t(f[i]) * val) % q);
        uint32_t wt = uint32_t(n - std::count(word.begin(), word.end(), 0u));

        Best local;
        if (lo < hi && wt != 0) local = {wt, lo};

        for (uint64_t k = lo + 1; k < hi; ++k) {
            uint64_t kk = k;
            std::size_t j = 0;
            while (kk % q == 0) {
                kk /= q;
                ++j;
            }
            for (auto [col, val] : rows[j].nz) {
                const uint32_t old = word[col];
                uint32_t nv = old + val;
                if (nv >= q) nv -= q;
                word[col] = nv;
                wt += (nv != 0) - (old != 0);
            }
            if (wt != 0 && wt < local.wt) local = {wt, k};  // wt = 0 only below rank m
        }
        best[tid] = local;
    }

    Best overall;
    for (const Best& b : best)
        if (b.wt < overall.wt || (b.wt == overall.wt && b.rank < overall.rank)) overall = b;
    if (overall.wt == UINT32_MAX)
        throw VerificationError("min_distance_rows: no nonzero codeword found");

    RowsDistanceResult out;
    out.d_min = overall.wt;
    out.enumerated = total - 1;
    out.witness.assign(n, 0);
    const std::vector<uint32_t> f = gray_decode(overall.rank, q, m);
    for (std::size_t i = 0; i < m; ++i)
        if (f[i])
            for (auto [col, val] : rows[i].nz)
                out.witness[col] = uint32_t((out.witness[col] + uint64_t(f[i]) * val) % q);
    const auto recount = uint32_t(out.witness.size() -
                                  std::count(out.witness.begin(), out.witness.end(), 0u));
    if (recount != out.d_min)
        throw VerificationError("min_distance_rows: witness weight mismatch");
    return out;
}

DistanceResult min_distance(const MetacyclicCode& code, const DistanceOptions& opts) {
    RowsDistanceResult rows = min_distance_rows(code.generator, opts);
    DistanceResult out;
    out.d_min = rows.d_min;
    out.enumerated = rows.enumerated;
    out.witness = Codeword::zero(code.params.q, code.params.m, code.params.s);
    out.witness.v = std::move(rows.witness);
    return out;
}

DistanceResult min_distance_serial(const MetacyclicCode& code, uint64_t guard) {
    const GroupParams& P = code.params;
    const BigInt total_big = big_pow(BigInt(P.q), P.m);
    if (total_big > guard)
        throw CapacityError("min_distance_serial: q^m exceeds the enumeration guard");
    const uint64_t total = total_big.convert_to<uint64_t>();

    DistanceResult outcome;
    outcome.d_min = UINT32_MAX;
    outcome.enumerated = total - 1;
    for (uint64_t k = 1; k < total; ++k) {
        const RingElement f = from_lex_rank(P.q, P.m, k);
        std::vector<RingElement> blocks{f};
        for (const auto& aj : code.a) blocks.push_back(ring_mul(f, aj));
        const Codeword w = Codeword::from_blocks(blocks);
        const uint32_t wt = w.weight();
        if (wt < outcome.d_min) {
            outcome.d_min = wt;
            outcome.witness = w;
        }
    }
    return outcome;
}

}  // namespace mcc
