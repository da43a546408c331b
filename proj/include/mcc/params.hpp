#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcc {

// Construction: only r^s = 1 (mod m) is demanded, enough to build the code.
// Counting: additionally q primitive mod m, s | m - 1, ord_m(r) = s, which is
// what the enumeration count and the CRT machinery rely on.
enum class Regime { Construction, Counting };

std::string to_string(Regime r);

struct GroupParams {
    uint32_t q = 0, m = 0, s = 0, r = 0;
    Regime regime = Regime::Construction;
    bool group_verified = false;  // ord_m(r) = s, exact semidirect-product shape

    uint32_t n() const { return m * s; }
};

struct ParamCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

ParamCheck check_params(uint64_t q, uint64_t m, uint64_t s, uint64_t r, Regime regime);

// Throws ParameterError listing every violated condition.
GroupParams validate(uint64_t q, uint64_t m, uint64_t s, uint64_t r, Regime regime);

}  // namespace mcc
