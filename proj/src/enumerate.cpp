#include "mcc/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <omp.h>

#include "mcc/code.hpp"
#include "mcc/errors.hpp"
#include "mcc/numtheory.hpp"

namespace mcc {

OmegaCount omega(uint32_t q, uint32_t m, uint32_t s) {
    // The count needs the strong hypotheses even without a concrete r.
    std::vector<std::string> violations;
    if (!is_prime(q)) violations.push_back("q is not prime");
    if (!is_prime(m) || m < 3) violations.push_back("m is not an odd prime");
    if (violations.empty() && m == q) violations.push_back("m equals q");
    if (s < 2) violations.push_back("s must exceed 1");
    if (violations.empty()) {
        if (mult_order(q % m, m) != m - 1) violations.push_back("q is not primitive mod m");
        if (s >= 2 && (m - 1) % s != 0) violations.push_back("s does not divide m - 1");
    }
    if (!violations.empty()) {
        std::string msg = "omega: invalid parameters:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw ParameterError(msg);
    }
    OmegaCount out;
    out.s_prime = uint32_t(std::gcd(uint64_t(s), uint64_t(q - 1)));
    out.t = big_pow(BigInt(q), (m - 1) / s);
    const BigInt num = big_pow(BigInt(q), m - 1) - 1;
    const BigInt den = out.t - 1;
    if (num % den != 0)
        throw VerificationError("omega: non-exact division, regime violated");
    out.value = out.s_prime * (num / den);
    return out;
}

OmegaCount omega(const GroupParams& params) {
    if (params.regime != Regime::Counting)
        throw ParameterError("omega: counting regime required");
    return omega(params.q, params.m, params.s);
}

std::vector<uint32_t> scalar_solutions(uint32_t q, uint32_t s) {
    if (!is_prime(q)) throw ParameterError("scalar_solutions: q must be prime");
    if (s == 0) throw ParameterError("scalar_solutions: s must be positive");
    std::vector<uint32_t> out;
    for (uint32_t z = 1; z < q; ++z)
        if (pow_mod(z, s, q) == 1) out.push_back(z);
    if (out.size() != std::gcd(uint64_t(s), uint64_t(q - 1)))
        throw VerificationError("scalar_solutions: count differs from gcd(s, q-1)");
    return out;
}

namespace {

uint64_t checked_total(const GroupParams& params, uint64_t bound, const char* who) {
    const BigInt total = big_pow(BigInt(params.q), params.m);
    if (total > bound)
        throw CapacityError(std::string(who) +
                            ": q^m exceeds the brute-force bound; use the CRT enumeration");
    return total.convert_to<uint64_t>();
}

}  // namespace

std::vector<RingElement> enumerate_bruteforce_serial(const GroupParams& params, uint64_t bound) {
    const uint64_t total = checked_total(params, bound, "enumerate_bruteforce_serial");
    std::vector<RingElement> out;
    for (uint64_t k = 0; k < total; ++k) {
        RingElement f = from_lex_rank(params.q, params.m, k);
        if (norm_check(params, f)) out.push_back(std::move(f));
    }
    return out;
}

std::vector<RingElement> enumerate_bruteforce(const GroupParams& params,
                                              const EnumerateOptions& opts) {
    const uint64_t total = checked_total(params, opts.bruteforce_bound, "enumerate_bruteforce");
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
    std::vector<std::vector<RingElement>> found(threads);
#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        const uint64_t lo = total * uint64_t(tid) / uint64_t(threads);
        const uint64_t hi = total * uint64_t(tid + 1) / uint64_t(threads);
        for (uint64_t k = lo; k < hi; ++k) {
            RingElement f = from_lex_rank(params.q, params.m, k);
            if (norm_check(params, f)) found[tid].push_back(std::move(f));
        }
    }
    std::vector<RingElement> out;
    for (auto& chunk : found)
        for (auto& f : chunk) out.push_back(std::move(f));
    return out;
}

std::vector<RingElement> enumerate_crt(const GroupParams& params, const EnumerateOptions& opts) {
    if (params.regime != Regime::Counting)
        throw ParameterError("enumerate_crt: counting regime required");
    const OmegaCount expected = omega(params);
    const SplitFactors sf = split(params.q, params.m);
    const auto scalars = scalar_solutions(params.q, params.s);
    const auto subgroup = norm_one_subgroup(sf, params.s, opts.norm_one);
    std::vector<RingElement> out;
    out.reserve(scalars.size() * subgroup.size());
    for (uint32_t z : scalars) {
        for (const FieldElem& w : subgroup) {
            CrtImage img;
            img.q = params.q;
            img.m = params.m;
            img.scalar = z;
            img.field_part = w;
            out.push_back(crt_recombine(img, sf));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RingElement& a, const RingElement& b) { return lex_less(a, b); });
    if (BigInt(out.size()) != expected.value)
        throw VerificationError("enumerate_crt: assembled count differs from omega");
    return out;
}

std::vector<RingElement> enumerate_valid(const GroupParams& params,
                                         const EnumerateOptions& opts) {
    if (params.m >= 17 && params.regime == Regime::Counting) return enumerate_crt(params, opts);
    return enumerate_bruteforce(params, opts);
}

std::size_t distinct_row_spaces(const GroupParams& params,
                                const std::vector<RingElement>& a1s) {
    std::set<std::vector<uint32_t>> spans;
    for (const auto& a1 : a1s) {
        MetacyclicCode code = build_code_unchecked(params, a1);
        spans.insert(gf_rref(code.generator).a);
    }
    return spans.size();
}

}  // namespace mcc
