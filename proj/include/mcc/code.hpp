#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcc/gfmat.hpp"
#include "mcc/params.hpp"
#include "mcc/ring.hpp"

namespace mcc {

// Length-ms vector, block-major: block j (a ring element) occupies [j*m, (j+1)*m).
struct Codeword {
    uint32_t q = 0, m = 0, s = 0;
    std::vector<uint32_t> v;

    static Codeword zero(uint32_t q, uint32_t m, uint32_t s);
    static Codeword from_blocks(const std::vector<RingElement>& blocks);

    RingElement block(uint32_t j) const;
    void set_block(uint32_t j, const RingElement& f);
    uint32_t weight() const;

    bool operator==(const Codeword&) const = default;
};

// a_j = a_1 * mu_r(a_1) * ... * mu_r^{j-1}(a_1) for j = 1..s-1.
std::vector<RingElement> chain(const GroupParams& params, const RingElement& a1);

// a_1 * mu_r(a_1) * ... * mu_r^{s-1}(a_1) = 1.
bool norm_check(const GroupParams& params, const RingElement& a1);

struct MetacyclicCode {
    GroupParams params;
    std::vector<RingElement> a;  // a_1..a_{s-1}
    GfMatrix generator;          // m x ms, row i = (x^i, x^i a_1, ..., x^i a_{s-1})
    std::size_t rank = 0;
};

// Refuses a_1 violating the norm condition (VerificationError).
MetacyclicCode build_code(const GroupParams& params, const RingElement& a1);

// Same construction without the norm gate, for negative controls.
MetacyclicCode build_code_unchecked(const GroupParams& params, const RingElement& a1);

// Left multiplication by x: every block gains one coefficient shift.
Codeword x_action(const GroupParams& params, const Codeword& w);

// Left multiplication by y: blocks rotate one step and pass through mu_r.
Codeword y_action(const GroupParams& params, const Codeword& w);

using Permutation = std::vector<uint32_t>;

// result[p] = then[first[p]]: apply `first`, then `then`.
Permutation compose(const Permutation& first, const Permutation& then);
Permutation perm_power(const Permutation& p, uint64_t e);
bool is_identity(const Permutation& p);

// Coordinate permutations of the flat layout realizing the two generators:
// sigma_x: (j, i) -> (j, i+1 mod m), sigma_y: (j, i) -> (j+1 mod s, r*i mod m).
struct GroupAction {
    uint32_t m = 0, s = 0, r = 0;
    Permutation sigma_x, sigma_y;
};

// Checks sigma_x^m = id, sigma_y^s = id, sigma_y . sigma_x = sigma_x^r . sigma_y,
// and transitivity on the ms points.
GroupAction group_action(uint32_t m, uint32_t s, uint64_t r);
GroupAction group_action(const GroupParams& params);

Codeword apply_permutation(const Codeword& w, const Permutation& sigma);

// Size of the permutation group generated by sigma_x and sigma_y (closure under
// composition, capped to keep runaway inputs from exploding).
std::size_t generated_group_order(const GroupAction& act, std::size_t cap = 1u << 20);

bool row_space_invariant(const GfMatrix& gen, const Permutation& sigma);

// y * (1, a_1, ..., a_{s-1}) = mu_r(a_{s-1}) * (1, a_1, ..., a_{s-1}) blockwise.
bool proportionality_holds(const MetacyclicCode& code);

// Row space stable under sigma_x and sigma_y, plus the proportionality identity.
bool is_invariant(const MetacyclicCode& code);

struct TwoSidedReport {
    bool two_sided = false;
    std::vector<std::string> violated;  // failed conditions, by name
};

// The code is also a right ideal iff a_{s-1}^s = 1, a_j = a_{s-1}^{s-j} for
// j < s-1, and a_j = a_j * x^(r^j - 1) for all j.
TwoSidedReport two_sided_check(const MetacyclicCode& code);

}  // namespace mcc
