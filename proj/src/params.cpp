#include "mcc/params.hpp"

#include "mcc/errors.hpp"
#include "mcc/numtheory.hpp"

namespace mcc {

std::string to_string(Regime r) {
    return r == Regime::Counting ? "counting" : "construction";
}

ParamCheck check_params(uint64_t q, uint64_t m, uint64_t s, uint64_t r, Regime regime) {
    ParamCheck out;
    auto fail = [&out](const char* what) { out.violations.push_back(what); };

    if (!is_prime(q)) fail("q is not prime");
    if (!is_prime(m) || m < 3) fail("m is not an odd prime");
    if (m == q) fail("m equals q");
    if (s < 2) fail("s must exceed 1");
    if (m > (uint64_t(1) << 31)) fail("m too large");
    if (s > m * 2) fail("s unreasonably large");  // keeps pow/order math in range

    const bool m_usable = is_prime(m) && m >= 3 && m <= (uint64_t(1) << 31);
    if (r < 2 || (m_usable && r >= m)) fail("r outside [2, m)");

    const bool r_usable = m_usable && r >= 2 && r < m;
    if (r_usable && s >= 2 && s <= m * 2 && pow_mod(r, s, m) != 1)
        fail("r^s != 1 (mod m)");

    if (regime == Regime::Counting && m_usable) {
        if (q % m == 0 || mult_order(q % m, m) != m - 1) fail("q is not primitive mod m");
        if (s < 2 || (m - 1) % s != 0) fail("s does not divide m - 1");
        if (r_usable) {
            if (mult_order(r, m) != s) fail("ord_m(r) != s");
        }
    }

    out.ok = out.violations.empty();
    return out;
}

GroupParams validate(uint64_t q, uint64_t m, uint64_t s, uint64_t r, Regime regime) {
    ParamCheck chk = check_params(q, m, s, r, regime);
    if (!chk.ok) {
        std::string msg = "invalid parameters:";
        for (const auto& v : chk.violations) msg += " " + v + ";";
        throw ParameterError(msg);
    }
    GroupParams p;
    p.q = uint32_t(q);
    p.m = uint32_t(m);
    p.s = uint32_t(s);
    p.r = uint32_t(r);
    p.regime = regime;
    p.group_verified = (mult_order(r, m) == s);
    return p;
}

}  // namespace mcc
