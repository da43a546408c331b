#include "mcc/bounds.hpp"

#include <cmath>

#include "mcc/enumerate.hpp"
#include "mcc/errors.hpp"

namespace mcc {

BigInt ball_volume(uint32_t n, uint32_t d, uint32_t q) {
    if (q < 2) throw ParameterError("ball_volume: q must be at least 2");
    if (d > n) throw ParameterError("ball_volume: radius exceeds length");
    BigInt sum = 1, binom = 1, qpow = 1;
    for (uint32_t i = 1; i <= d; ++i) {
        binom = binom * (n - i + 1) / i;  // exact at every step
        qpow *= (q - 1);
        sum += binom * qpow;
    }
    return sum;
}

double entropy(double t, uint32_t q) {
    if (q < 2) throw ParameterError("entropy: q must be at least 2");
    const double top = double(q - 1) / double(q);
    if (t < 0.0 || t > top + 1e-12) throw ParameterError("entropy: argument outside [0, (q-1)/q]");
    t = std::min(t, top);
    if (t == 0.0) return 0.0;
    const double lq = std::log(double(q));
    double val = t * std::log(double(q - 1)) / lq - t * std::log(t) / lq;
    if (t < 1.0) val -= (1.0 - t) * std::log(1.0 - t) / lq;
    return val;
}

double entropy_inverse(double y, uint32_t q) {
    if (q < 2) throw ParameterError("entropy_inverse: q must be at least 2");
    if (y < 0.0 || y > 1.0 + 1e-12) throw ParameterError("entropy_inverse: argument outside [0, 1]");
    y = std::min(y, 1.0);
    double lo = 0.0, hi = double(q - 1) / double(q);
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (entropy(mid, q) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

BoundReport guaranteed_distance(const GroupParams& params) {
    if (params.regime != Regime::Counting)
        throw ParameterError("guaranteed_distance: counting regime required");
    BoundReport rep;
    rep.params = params;
    rep.omega_value = omega(params).value;
    rep.n = params.n();
    rep.rate = 1.0 / double(params.s);
    rep.delta_star =
        entropy_inverse(double(params.s - 1) / (double(params.s) * params.s), params.q);

    bool prev_satisfied = true;
    for (uint32_t d = 0; d < params.m; ++d) {
        BoundRow row;
        row.d = d;
        row.volume = ball_volume(rep.n, d, params.q);
        row.q_volume = params.q * row.volume;
        row.satisfied = rep.omega_value > row.q_volume;
        if (row.satisfied && !prev_satisfied)
            throw VerificationError("guaranteed_distance: satisfaction not monotone");
        prev_satisfied = row.satisfied;
        if (row.satisfied) rep.guaranteed_d = d;
        rep.rows.push_back(std::move(row));
    }
    rep.capped_at_m = rep.rows.back().satisfied;

    const double log_omega = big_log2(rep.omega_value) / std::log2(double(params.q));
    rep.entropic_d = 0;
    for (uint32_t d = 0; d < params.m; ++d) {
        const double rhs = 1.0 + double(rep.n) * entropy(double(d) / double(rep.n), params.q);
        if (log_omega > rhs) rep.entropic_d = d;
    }
    return rep;
}

}  // namespace mcc
