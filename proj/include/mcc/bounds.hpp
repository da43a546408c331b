#pragma once

#include <cstdint>
#include <vector>

#include "mcc/bigint.hpp"
#include "mcc/params.hpp"

namespace mcc {

// |B(n, d)| = sum_{i<=d} C(n,i) (q-1)^i, exact.
BigInt ball_volume(uint32_t n, uint32_t d, uint32_t q);

// H_q(t) = t log_q(q-1) - t log_q t - (1-t) log_q(1-t) on [0, (q-1)/q].
double entropy(double t, uint32_t q);

// Inverse of H_q on [0, 1], bisection to 1e-12.
double entropy_inverse(double y, uint32_t q);

struct BoundRow {
    uint32_t d = 0;
    BigInt volume;    // V_q(ms, d)
    BigInt q_volume;  // q * V_q(ms, d)
    bool satisfied = false;  // omega > q * V
};

struct BoundReport {
    GroupParams params;
    BigInt omega_value;
    uint32_t n = 0;
    std::vector<BoundRow> rows;  // d = 0 .. m-1
    uint32_t guaranteed_d = 0;   // largest d < m with omega > q * V (exact volumes)
    uint32_t entropic_d = 0;     // same with V replaced by q^(n H_q(d/n))
    bool capped_at_m = false;    // inequality still held at d = m-1
    double delta_star = 0.0;     // H_q^{-1}((s-1)/s^2)
    double rate = 0.0;           // 1/s
};

// Existence guarantee: some enumerated code has d_min > guaranteed_d.
BoundReport guaranteed_distance(const GroupParams& params);

}  // namespace mcc
