#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcc/bigint.hpp"
#include "mcc/errors.hpp"

namespace mcc {

// Deterministic for every 64-bit input (fixed Miller-Rabin witness set).
bool is_prime(uint64_t n);

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t mod);

// Complete factorization, (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
uint64_t mult_order(uint64_t a, uint64_t m);

// Trial division up to `bound`, then a deterministic primality check on the
// cofactor, with perfect-power peeling. nullopt if the cofactor resists.
std::optional<std::vector<std::pair<BigInt, int>>> factorize_big(BigInt n,
                                                                 uint64_t bound = 1'000'000);

// Streaming prime generator, segmented sieve in 2^16 blocks. Value semantics.
class PrimeStream {
public:
    PrimeStream();
    uint64_t next();

private:
    void refill();

    uint64_t block_lo_;
    std::vector<uint64_t> base_;     // sieving primes
    uint64_t base_limit_;
    std::vector<uint64_t> pending_;
    std::size_t idx_;
};

// Invariants of a candidate base a: h is the largest k with a a perfect k-th
// power, d the squarefree part of a, delta the discriminant of Q(sqrt(a)).
struct ArtinBase {
    int64_t a = 0;
    uint64_t h = 1;
    int64_t d = 0;
    int64_t delta = 0;
};

ArtinBase artin_base(int64_t a);

struct AdmissibilityVerdict {
    bool admissible = false;
    std::vector<std::string> reasons;  // violated conditions, by name
    ArtinBase base;
    uint64_t s = 0;
};

AdmissibilityVerdict admissibility(int64_t a, uint64_t s);

struct InadmissibleError : ParameterError {
    AdmissibilityVerdict verdict;
    InadmissibleError(const std::string& what, AdmissibilityVerdict v)
        : ParameterError(what), verdict(std::move(v)) {}
};

struct ArtinPrimeRow {
    uint64_t m = 0;
    uint64_t ord = 0;      // multiplicative order of a mod m, always m - 1 here
    uint64_t residue = 0;  // m mod s
};

struct ArtinPrimes {
    std::vector<ArtinPrimeRow> rows;
    bool exhausted_limit = false;  // hit `limit` before finding `count` primes
};

// First `count` primes m <= limit with m = 1 (mod s), m not dividing a, and a a
// primitive root mod m. Refuses inadmissible (a, s) pairs.
ArtinPrimes artin_primes(int64_t a, uint64_t s, std::size_t count,
                         uint64_t limit = uint64_t(1) << 31);

struct DensityReport {
    uint64_t qualifying = 0;   // primes <= limit with the full property
    uint64_t progression = 0;  // primes <= limit congruent to 1 mod s
    double ratio = 0.0;
};

DensityReport empirical_density(int64_t a, uint64_t s, uint64_t limit);

// prod over primes p <= prime_limit of (1 - 1/(p(p-1))).
double artin_constant(uint64_t prime_limit = 1'000'000);

}  // namespace mcc
