#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcc/bigint.hpp"
#include "mcc/ring.hpp"

namespace mcc {

// x^m - 1 = (x - 1) * h(x) over F_q, h = 1 + x + ... + x^{m-1}.
struct SplitFactors {
    uint32_t q = 0, m = 0;
    std::vector<uint32_t> linear;  // x - 1, ascending coefficients
    std::vector<uint32_t> h;       // all-ones polynomial of degree m - 1
    bool h_irreducible = false;    // <=> ord_m(q) = m - 1
    BigInt Q;                      // q^{m-1}, the residue field size when irreducible
};

SplitFactors split(uint32_t q, uint32_t m);

// Residue mod h: ascending coefficients, fixed length m - 1.
using FieldElem = std::vector<uint32_t>;

struct CrtImage {
    uint32_t q = 0, m = 0;
    uint32_t scalar = 0;   // f(1), the residue mod (x - 1)
    FieldElem field_part;  // f mod h
};

CrtImage crt_decompose(const RingElement& f, const SplitFactors& sf);
RingElement crt_recombine(const CrtImage& img, const SplitFactors& sf);

FieldElem field_zero(const SplitFactors& sf);
FieldElem field_one(const SplitFactors& sf);
bool field_is_one(const FieldElem& z);
bool field_is_zero(const FieldElem& z);
FieldElem field_mul(const FieldElem& a, const FieldElem& b, const SplitFactors& sf);
FieldElem field_pow(const FieldElem& a, BigInt e, const SplitFactors& sf);

// t = q^((m-1)/s); requires s | m - 1.
BigInt subfield_power(const SplitFactors& sf, uint32_t s);

// (t^s - 1)/(t - 1) = 1 + t + ... + t^{s-1}, the norm-one subgroup order.
BigInt norm_one_order(const SplitFactors& sf, uint32_t s);

// Smallest generator of F_Q^* in coefficient order, or nullopt when Q - 1
// cannot be fully factored within `factor_bound`.
std::optional<FieldElem> find_field_generator(const SplitFactors& sf,
                                              uint64_t factor_bound = 1'000'000);

struct NormOneOptions {
    enum class Method { Auto, Generator, Exhaustive };
    Method method = Method::Auto;
    uint64_t factor_bound = 1'000'000;
    uint64_t max_elements = uint64_t(1) << 22;    // refuse to materialize past this
    uint64_t exhaustive_bound = uint64_t(1) << 22;  // largest Q the filter will scan
};

// All z in F_Q^* with z^(1 + t + ... + t^{s-1}) = 1, sorted in coefficient
// order. Requires h irreducible and s | m - 1.
std::vector<FieldElem> norm_one_subgroup(const SplitFactors& sf, uint32_t s,
                                         const NormOneOptions& opts = {});

}  // namespace mcc
