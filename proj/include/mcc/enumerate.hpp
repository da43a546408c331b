#pragma once

#include <cstdint>
#include <vector>

#include "mcc/bigint.hpp"
#include "mcc/crt.hpp"
#include "mcc/params.hpp"
#include "mcc/ring.hpp"

namespace mcc {

struct OmegaCount {
    BigInt value;       // s' * (q^{m-1} - 1)/(q^{(m-1)/s} - 1)
    uint32_t s_prime = 0;  // gcd(s, q - 1)
    BigInt t;           // q^{(m-1)/s}
};

OmegaCount omega(uint32_t q, uint32_t m, uint32_t s);
OmegaCount omega(const GroupParams& params);  // counting regime required

// All z in F_q with z^s = 1; the count is gcd(s, q - 1).
std::vector<uint32_t> scalar_solutions(uint32_t q, uint32_t s);

struct EnumerateOptions {
    uint64_t bruteforce_bound = uint64_t(1) << 22;  // largest q^m scanned
    int threads = 0;                                // 0 = library default
    NormOneOptions norm_one;
};

// Scan all q^m candidates in coefficient order, keep those passing norm_check.
std::vector<RingElement> enumerate_bruteforce(const GroupParams& params,
                                              const EnumerateOptions& opts = {});
std::vector<RingElement> enumerate_bruteforce_serial(const GroupParams& params,
                                                     uint64_t bound = uint64_t(1) << 22);

// Assemble the valid set through the splitting: scalar s-th roots of unity
// crossed with the norm-one subgroup, recombined. Counting regime only.
std::vector<RingElement> enumerate_crt(const GroupParams& params,
                                       const EnumerateOptions& opts = {});

// Primary path: CRT for m >= 17, brute force below.
std::vector<RingElement> enumerate_valid(const GroupParams& params,
                                         const EnumerateOptions& opts = {});

// Number of distinct row spaces among the codes T_{a_1} (tuples may repeat a span).
std::size_t distinct_row_spaces(const GroupParams& params,
                                const std::vector<RingElement>& a1s);

}  // namespace mcc
