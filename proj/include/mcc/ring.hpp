#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcc/gfmat.hpp"

namespace mcc {

// Element of F_q[x]/(x^m - 1), q prime. Coefficients ascending: c[i] <-> x^i.
struct RingElement {
    uint32_t q = 0, m = 0;
    std::vector<uint32_t> c;

    static RingElement zero(uint32_t q, uint32_t m);
    static RingElement one(uint32_t q, uint32_t m);
    static RingElement monomial(uint32_t q, uint32_t m, uint32_t i, uint32_t val = 1);
    static RingElement all_ones(uint32_t q, uint32_t m);  // 1 + x + ... + x^{m-1}
    static RingElement from_coeffs(uint32_t q, uint32_t m, std::vector<int64_t> raw);

    bool is_zero() const;
    bool operator==(const RingElement&) const = default;
};

// Strict ordering on coefficient vectors, c[0] compared first.
bool lex_less(const RingElement& a, const RingElement& b);

// Rank of f among all q^m elements in that order (c[0] most significant digit).
uint64_t lex_rank(const RingElement& f);
RingElement from_lex_rank(uint32_t q, uint32_t m, uint64_t rank);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_scale(const RingElement& a, uint32_t lambda);
RingElement ring_pow(const RingElement& a, uint64_t e);

// f(x) -> f(x^r): coefficient i moves to position r*i mod m. Needs gcd(r, m) = 1.
RingElement multiplier(const RingElement& f, uint64_t r);

uint32_t eval_at_one(const RingElement& f);
uint32_t weight(const RingElement& f);

// m x m matrix whose row i holds the coefficients of x^i * f.
GfMatrix circulant_block(const RingElement& f);

// Inverse of circulant_block: reads the first row back as an element.
RingElement from_circulant(const GfMatrix& block);

std::string to_string(const RingElement& f);  // human form, e.g. "1 + x + x^3"

// Two hex digits per coefficient, ascending index. Fixed wire format.
std::string hex_pack(const RingElement& f);
RingElement hex_unpack(uint32_t q, uint32_t m, const std::string& hex);

}  // namespace mcc
