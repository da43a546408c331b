#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "mcc/code.hpp"
#include "mcc/enumerate.hpp"
#include "mcc/errors.hpp"
#include "mcc/gfmat.hpp"

using namespace mcc;

namespace {

struct Instance {
    uint64_t q, m, s, r, count;
};

const std::vector<Instance> kInstances = {
    {2, 5, 2, 4, 5}, {3, 5, 2, 4, 20}, {3, 7, 3, 2, 91}, {2, 11, 2, 10, 33}, {2, 13, 3, 3, 273},
};

// Quadratic oracle: pairwise row-space comparison through rref membership.
std::size_t distinct_spans_oracle(const GroupParams& p, const std::vector<RingElement>& a1s) {
    std::vector<GfMatrix> reduced;
    for (const auto& a1 : a1s) reduced.push_back(gf_rref(build_code(p, a1).generator));
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i && !seen; ++j) seen = reduced[i] == reduced[j];
        if (!seen) ++distinct;
    }
    return distinct;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("omega closed form on the five instances") {
    for (const auto& inst : kInstances) {
        const auto w = omega(uint32_t(inst.q), uint32_t(inst.m), uint32_t(inst.s));
        CHECK(w.value == inst.count);
    }

    const auto w = omega(3, 5, 2);
    CHECK(w.s_prime == 2);
    CHECK(w.t == 9);

    CHECK(omega(2, 5, 2).s_prime == 1);
    CHECK(omega(2, 5, 2).t == 4);
}

TEST_CASE("omega refuses parameters outside the counting regime") {
    CHECK_THROWS_AS(omega(2, 7, 3), ParameterError);   // 2 not primitive mod 7
    CHECK_THROWS_AS(omega(2, 11, 3), ParameterError);  // 3 does not divide 10
    CHECK_THROWS_AS(omega(4, 5, 2), ParameterError);

    const auto p = validate(2, 7, 3, 2, Regime::Construction);
    CHECK_THROWS_AS(omega(p), ParameterError);
}

TEST_CASE("scalar_solutions lists the s-th roots of unity") {
    CHECK(scalar_solutions(2, 2) == std::vector<uint32_t>{1});
    CHECK(scalar_solutions(3, 2) == std::vector<uint32_t>{1, 2});
    CHECK(scalar_solutions(3, 3) == std::vector<uint32_t>{1});
    CHECK(scalar_solutions(5, 2) == std::vector<uint32_t>{1, 4});
    CHECK(scalar_solutions(5, 4) == std::vector<uint32_t>{1, 2, 3, 4});
}

TEST_CASE("brute force, CRT, and the formula agree on the five instances") {
    for (const auto& inst : kInstances) {
        const auto p = validate(inst.q, inst.m, inst.s, inst.r, Regime::Counting);
        const auto serial = enumerate_bruteforce_serial(p);
        const auto parallel = enumerate_bruteforce(p);
        const auto through_crt = enumerate_crt(p);
        CHECK(serial.size() == inst.count);
        CHECK(serial == parallel);
        CHECK(serial == through_crt);
        CHECK(std::is_sorted(serial.begin(), serial.end(), lex_less));
        for (const auto& a1 : serial) CHECK(norm_check(p, a1));
    }
}

TEST_CASE("parallel brute force is invariant under the thread count") {
    const auto p = validate(2, 11, 2, 10, Regime::Counting);
    EnumerateOptions opts;
    opts.threads = 1;
    const auto one = enumerate_bruteforce(p, opts);
    opts.threads = 4;
    const auto four = enumerate_bruteforce(p, opts);
    CHECK(one == four);
}

TEST_CASE("the valid set at q=2 m=5 is the monomials") {
    const auto p = validate(2, 5, 2, 4, Regime::Counting);
    const auto got = enumerate_valid(p);
    std::vector<RingElement> want;
    for (uint32_t i = 0; i < 5; ++i) want.push_back(RingElement::monomial(2, 5, i));
    std::sort(want.begin(), want.end(), lex_less);
    CHECK(got == want);
}

TEST_CASE("enumerate_valid switches to the splitting route when brute force is infeasible") {
    const auto p = validate(3, 17, 2, 16, Regime::Counting);
    CHECK_THROWS_AS(enumerate_bruteforce_serial(p), CapacityError);

    const auto got = enumerate_valid(p);
    CHECK(got.size() == 13124);  // 2 * (3^16 - 1)/(3^8 - 1)
    CHECK(std::is_sorted(got.begin(), got.end(), lex_less));
    for (std::size_t i = 0; i + 1 < got.size(); ++i) CHECK(lex_less(got[i], got[i + 1]));
    for (const auto& a1 : got) CHECK(norm_check(p, a1));
}

TEST_CASE("every enumerated element yields an invariant code") {
    for (const auto& inst : kInstances) {
        const auto p = validate(inst.q, inst.m, inst.s, inst.r, Regime::Counting);
        for (const auto& a1 : enumerate_valid(p)) CHECK(is_invariant(build_code(p, a1)));
    }
}

TEST_CASE("distinct row spaces match the pairwise oracle") {
    for (const auto& inst : {kInstances[0], kInstances[1]}) {
        const auto p = validate(inst.q, inst.m, inst.s, inst.r, Regime::Counting);
        const auto a1s = enumerate_valid(p);
        const auto got = distinct_row_spaces(p, a1s);
        CHECK(got == distinct_spans_oracle(p, a1s));
        CHECK(got >= 1);
        CHECK(got <= a1s.size());
    }
}

}  // TEST_SUITE
