#include <cstdint>
#include <vector>

#include "doctest.h"
#include "mcc/code.hpp"
#include "mcc/errors.hpp"

using namespace mcc;

namespace {

struct Xorshift {
    uint64_t s = 0x853C49E6748FEA9Bull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

Codeword random_word(uint32_t q, uint32_t m, uint32_t s, Xorshift& rng) {
    Codeword w = Codeword::zero(q, m, s);
    for (auto& c : w.v) c = uint32_t(rng.next() % q);
    return w;
}

// Direct product form of the chain, no recurrence.
RingElement chain_oracle(const GroupParams& p, const RingElement& a1, uint32_t j) {
    RingElement acc = RingElement::one(p.q, p.m);
    uint64_t rpow = 1;
    for (uint32_t i = 0; i < j; ++i) {
        acc = ring_mul(acc, multiplier(a1, rpow));
        rpow = rpow * p.r % p.m;
    }
    return acc;
}

}  // namespace

TEST_SUITE("code") {

TEST_CASE("codeword block accessors round-trip") {
    Xorshift rng;
    const auto w = random_word(3, 7, 3, rng);
    auto rebuilt = Codeword::zero(3, 7, 3);
    uint32_t total = 0;
    for (uint32_t j = 0; j < 3; ++j) {
        const auto b = w.block(j);
        total += weight(b);
        rebuilt.set_block(j, b);
    }
    CHECK(rebuilt == w);
    CHECK(w.weight() == total);

    const auto blocks = std::vector<RingElement>{w.block(0), w.block(1), w.block(2)};
    CHECK(Codeword::from_blocks(blocks) == w);
}

TEST_CASE("chain matches the explicit product form") {
    const auto p = validate(2, 13, 3, 3, Regime::Counting);
    Xorshift rng;
    for (int trial = 0; trial < 20; ++trial) {
        RingElement a1 = RingElement::zero(2, 13);
        for (auto& c : a1.c) c = uint32_t(rng.next() % 2);
        const auto got = chain(p, a1);
        REQUIRE(got.size() == 2);
        CHECK(got[0] == a1);
        CHECK(got[1] == chain_oracle(p, a1, 2));
    }
}

TEST_CASE("norm_check accepts exactly the elements with product one") {
    const auto p = validate(2, 5, 2, 4, Regime::Counting);
    CHECK(norm_check(p, RingElement::one(2, 5)));
    CHECK(norm_check(p, RingElement::monomial(2, 5, 1)));  // x * x^4 = 1
    CHECK_FALSE(norm_check(p, RingElement::from_coeffs(2, 5, {1, 1, 0, 0, 0})));
    CHECK_FALSE(norm_check(p, RingElement::zero(2, 5)));
}

TEST_CASE("build_code lays out the generator blockwise") {
    const auto p = validate(2, 5, 2, 4, Regime::Counting);
    const auto code = build_code(p, RingElement::monomial(2, 5, 1));
    CHECK(code.rank == 5);
    CHECK(code.generator.rows == 5);
    CHECK(code.generator.cols == 10);
    for (uint32_t i = 0; i < 5; ++i)
        for (uint32_t k = 0; k < 5; ++k) {
            CHECK(code.generator.at(i, k) == (i == k ? 1 : 0));
            CHECK(code.generator.at(i, 5 + k) == (k == (i + 1) % 5 ? 1 : 0));
        }

    CHECK_THROWS_AS(build_code(p, RingElement::from_coeffs(2, 5, {1, 1, 0, 0, 0})),
                    VerificationError);
}

TEST_CASE("the 3 x 6 two-block example") {
    const auto p = validate(2, 3, 2, 2, Regime::Counting);
    const auto code = build_code_unchecked(p, RingElement::from_coeffs(2, 3, {0, 1, 1}));
    const std::vector<uint32_t> want = {1, 0, 0, 0, 1, 1,
                                        0, 1, 0, 1, 0, 1,
                                        0, 0, 1, 1, 1, 0};
    CHECK(code.generator.a == want);
    CHECK(code.rank == 3);
}

TEST_CASE("permutation helpers compose in application order") {
    const Permutation f = {1, 2, 0};
    const Permutation g = {0, 2, 1};
    CHECK(compose(f, g) == Permutation{2, 1, 0});
    CHECK(perm_power(f, 3) == Permutation{0, 1, 2});
    CHECK(is_identity(perm_power(f, 3)));
    CHECK_FALSE(is_identity(f));
}

TEST_CASE("group action satisfies the defining relations") {
    struct Shape {
        uint32_t m, s;
        uint64_t r;
    };
    for (const auto& [m, s, r] :
         {Shape{3, 2, 2}, Shape{5, 2, 4}, Shape{11, 2, 10}, Shape{13, 3, 3}, Shape{7, 3, 2}}) {
        const auto act = group_action(m, s, r);
        CHECK(is_identity(perm_power(act.sigma_x, m)));
        CHECK(is_identity(perm_power(act.sigma_y, s)));
        CHECK_FALSE(is_identity(perm_power(act.sigma_x, 1)));
        CHECK(compose(act.sigma_x, act.sigma_y) ==
              compose(act.sigma_y, perm_power(act.sigma_x, r)));
        CHECK(generated_group_order(act) == std::size_t(m) * s);
    }
}

TEST_CASE("group actions and block actions are the same maps") {
    const auto p = validate(2, 13, 3, 3, Regime::Counting);
    const auto act = group_action(p);
    Xorshift rng;
    for (int trial = 0; trial < 30; ++trial) {
        const auto w = random_word(p.q, p.m, p.s, rng);
        CHECK(x_action(p, w) == apply_permutation(w, act.sigma_x));
        CHECK(y_action(p, w) == apply_permutation(w, act.sigma_y));
        CHECK(apply_permutation(w, act.sigma_y).weight() == w.weight());
    }
    // x then y against y then x^r, as words this time
    const auto w = random_word(p.q, p.m, p.s, rng);
    auto lhs = y_action(p, x_action(p, w));
    auto rhs = x_action(p, y_action(p, w));
    for (uint32_t i = 1; i < p.r; ++i) rhs = x_action(p, rhs);
    CHECK(lhs == rhs);
}

TEST_CASE("codes built from norm-one elements are invariant") {
    const auto p = validate(2, 5, 2, 4, Regime::Counting);
    for (uint32_t i = 0; i < 5; ++i) {
        const auto code = build_code(p, RingElement::monomial(2, 5, i));
        CHECK(proportionality_holds(code));
        CHECK(is_invariant(code));
    }
}

TEST_CASE("a norm violation breaks invariance") {
    const auto p = validate(2, 5, 2, 4, Regime::Counting);
    const auto bad = build_code_unchecked(p, RingElement::from_coeffs(2, 5, {1, 1, 0, 0, 0}));
    CHECK_FALSE(proportionality_holds(bad));
    CHECK_FALSE(is_invariant(bad));
}

TEST_CASE("left ideals here are not right ideals") {
    const auto p = validate(2, 5, 2, 4, Regime::Counting);
    const auto rep = two_sided_check(build_code(p, RingElement::one(2, 5)));
    CHECK_FALSE(rep.two_sided);
    CHECK(rep.violated == std::vector<std::string>{"a_1 != a_1 * x^(r^1 - 1)"});

    const auto p3 = validate(2, 13, 3, 3, Regime::Counting);
    const auto rep3 = two_sided_check(build_code(p3, RingElement::one(2, 13)));
    CHECK_FALSE(rep3.two_sided);
}

}  // TEST_SUITE
