#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "mcc/errors.hpp"
#include "mcc/params.hpp"

using namespace mcc;

namespace {

bool has_violation(const ParamCheck& chk, const std::string& what) {
    return std::find(chk.violations.begin(), chk.violations.end(), what) != chk.violations.end();
}

}  // namespace

TEST_SUITE("params") {

TEST_CASE("the five counting instances validate") {
    struct Instance {
        uint64_t q, m, s, r;
    };
    for (const auto& inst : {Instance{2, 5, 2, 4}, Instance{3, 5, 2, 4}, Instance{3, 7, 3, 2},
                             Instance{2, 11, 2, 10}, Instance{2, 13, 3, 3}}) {
        const auto p = validate(inst.q, inst.m, inst.s, inst.r, Regime::Counting);
        CHECK(p.regime == Regime::Counting);
        CHECK(p.group_verified);
        CHECK(p.n() == inst.m * inst.s);
    }
}

TEST_CASE("individual violations are named") {
    CHECK(has_violation(check_params(4, 5, 2, 4, Regime::Counting), "q is not prime"));
    CHECK(has_violation(check_params(2, 9, 2, 8, Regime::Counting), "m is not an odd prime"));
    CHECK(has_violation(check_params(2, 2, 2, 1, Regime::Construction), "m is not an odd prime"));
    CHECK(has_violation(check_params(5, 5, 2, 4, Regime::Counting), "m equals q"));
    CHECK(has_violation(check_params(2, 5, 1, 4, Regime::Counting), "s must exceed 1"));
    CHECK(has_violation(check_params(2, 5, 2, 1, Regime::Counting), "r outside [2, m)"));
    CHECK(has_violation(check_params(2, 5, 2, 5, Regime::Counting), "r outside [2, m)"));
    CHECK(has_violation(check_params(2, 5, 2, 3, Regime::Construction), "r^s != 1 (mod m)"));
    CHECK(has_violation(check_params(2, 7, 2, 6, Regime::Counting), "q is not primitive mod m"));
    CHECK(has_violation(check_params(2, 11, 3, 10, Regime::Counting), "s does not divide m - 1"));
    CHECK(has_violation(check_params(2, 13, 6, 3, Regime::Counting), "ord_m(r) != s"));
}

TEST_CASE("validate throws with every violation listed") {
    try {
        validate(4, 9, 1, 0, Regime::Counting);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        const std::string what = e.what();
        CHECK(what.find("q is not prime") != std::string::npos);
        CHECK(what.find("m is not an odd prime") != std::string::npos);
        CHECK(what.find("s must exceed 1") != std::string::npos);
    }
}

TEST_CASE("construction regime asks only for r^s = 1") {
    // 2 is not primitive mod 7, so counting refuses this instance
    CHECK_FALSE(check_params(2, 7, 3, 2, Regime::Counting).ok);
    const auto p = validate(2, 7, 3, 2, Regime::Construction);
    CHECK(p.regime == Regime::Construction);
    CHECK(p.group_verified);  // ord_7(2) = 3 = s

    // r^s = 1 holds but the order of r is a proper divisor of s
    const auto weak = validate(2, 7, 6, 2, Regime::Construction);
    CHECK_FALSE(weak.group_verified);
}

TEST_CASE("s = m - 1 is a valid counting choice") {
    const auto p = validate(2, 5, 4, 2, Regime::Counting);
    CHECK(p.group_verified);
}

}  // TEST_SUITE
