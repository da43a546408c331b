#include "mcc/crt.hpp"

#include <algorithm>

#include "mcc/errors.hpp"
#include "mcc/numtheory.hpp"

namespace mcc {

namespace {

void require_prime_pair(uint32_t q, uint32_t m) {
    if (!is_prime(q)) throw ParameterError("split: q must be prime");
    if (!is_prime(m) || m < 3) throw ParameterError("split: m must be an odd prime");
    if (q == m) throw ParameterError("split: q and m must differ");
}

// Plain polynomial product over F_q, ascending coefficients.
std::vector<uint32_t> poly_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                               uint32_t q) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    }
    std::vector<uint32_t> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = uint32_t(acc[i] % q);
    return out;
}

// Remainder mod the all-ones polynomial h of degree m-1, using
// x^(m-1) = -(1 + x + ... + x^(m-2)) mod h.
std::vector<uint32_t> mod_h(std::vector<uint32_t> f, uint32_t q, uint32_t m) {
    const std::size_t deg = m - 1;
    for (std::size_t i = f.size(); i-- > deg;) {
        const uint32_t lead = f[i];
        if (lead == 0) continue;
        f[i] = 0;
        for (std::size_t j = i - deg; j < i; ++j) {
            f[j] += q - uint32_t(uint64_t(lead) % q);
            f[j] %= q;
        }
    }
    f.resize(deg, 0);
    return f;
}

}  // namespace

SplitFactors split(uint32_t q, uint32_t m) {
    require_prime_pair(q, m);
    SplitFactors sf;
    sf.q = q;
    sf.m = m;
    sf.linear = {q - 1, 1};
    sf.h.assign(m, 1);
    sf.h_irreducible = (mult_order(q, m) == m - 1);
    sf.Q = big_pow(BigInt(q), m - 1);
    return sf;
}

CrtImage crt_decompose(const RingElement& f, const SplitFactors& sf) {
    if (f.q != sf.q || f.m != sf.m) throw ParameterError("crt_decompose: ring mismatch");
    CrtImage img;
    img.q = sf.q;
    img.m = sf.m;
    img.scalar = eval_at_one(f);
    img.field_part = mod_h(f.c, sf.q, sf.m);
    return img;
}

RingElement crt_recombine(const CrtImage& img, const SplitFactors& sf) {
    if (img.q != sf.q || img.m != sf.m) throw ParameterError("crt_recombine: ring mismatch");
    if (img.scalar >= sf.q) throw ParameterError("crt_recombine: scalar out of range");
    if (img.field_part.size() != std::size_t(sf.m - 1))
        throw ParameterError("crt_recombine: field part has wrong length");
    const uint32_t q = sf.q, m = sf.m;
    // Idempotent for the (x - 1) component: eps = h / h(1), constant vector 1/m.
    const uint32_t inv_m = gf_inverse(m % q, q);
    RingElement eps = ring_scale(RingElement::all_ones(q, m), inv_m);
    RingElement co = ring_sub(RingElement::one(q, m), eps);  // kills the scalar component
    RingElement lift = RingElement::zero(q, m);
    std::copy(img.field_part.begin(), img.field_part.end(), lift.c.begin());
    return ring_add(ring_scale(eps, img.scalar), ring_mul(lift, co));
}

FieldElem field_zero(const SplitFactors& sf) { return FieldElem(sf.m - 1, 0); }

FieldElem field_one(const SplitFactors& sf) {
    FieldElem z(sf.m - 1, 0);
    z[0] = 1;
    return z;
}

bool field_is_one(const FieldElem& z) {
    if (z.empty() || z[0] != 1) return false;
    return std::all_of(z.begin() + 1, z.end(), [](uint32_t x) { return x == 0; });
}

bool field_is_zero(const FieldElem& z) {
    return std::all_of(z.begin(), z.end(), [](uint32_t x) { return x == 0; });
}

FieldElem field_mul(const FieldElem& a, const FieldElem& b, const SplitFactors& sf) {
    if (a.size() != std::size_t(sf.m - 1) || b.size() != std::size_t(sf.m - 1))
        throw ParameterError("field_mul: operand length mismatch");
    return mod_h(poly_mul(a, b, sf.q), sf.q, sf.m);
}

FieldElem field_pow(const FieldElem& a, BigInt e, const SplitFactors& sf) {
    if (e < 0) throw ParameterError("field_pow: negative exponent");
    FieldElem acc = field_one(sf);
    FieldElem b = a;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) acc = field_mul(acc, b, sf);
        e >>= 1;
        if (e > 0) b = field_mul(b, b, sf);
    }
    return acc;
}

BigInt subfield_power(const SplitFactors& sf, uint32_t s) {
    if (s == 0 || (sf.m - 1) % s != 0)
        throw ParameterError("subfield_power: s must divide m - 1");
    return big_pow(BigInt(sf.q), (sf.m - 1) / s);
}

BigInt norm_one_order(const SplitFactors& sf, uint32_t s) {
    const BigInt t = subfield_power(sf, s);
    return (big_pow(t, s) - 1) / (t - 1);
}

namespace {

// Advance a coefficient vector one step in ascending order (c[0] most
// significant); returns false after the last vector wraps to zero.
bool next_vector(FieldElem& v, uint32_t q) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < q) return true;
        v[i] = 0;
    }
    return false;
}

}  // namespace

std::optional<FieldElem> find_field_generator(const SplitFactors& sf, uint64_t factor_bound) {
    if (!sf.h_irreducible)
        throw ParameterError("find_field_generator: residue ring is not a field");
    auto factors = factorize_big(sf.Q - 1, factor_bound);
    if (!factors) return std::nullopt;
    std::vector<BigInt> cofactors;
    for (const auto& [p, e] : *factors) {
        (void)e;
        cofactors.push_back((sf.Q - 1) / p);
    }
    FieldElem cand = field_zero(sf);
    while (next_vector(cand, sf.q)) {
        bool ok = true;
        for (const BigInt& e : cofactors) {
            if (field_is_one(field_pow(cand, e, sf))) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    return std::nullopt;  // unreachable for a genuine field
}

std::vector<FieldElem> norm_one_subgroup(const SplitFactors& sf, uint32_t s,
                                         const NormOneOptions& opts) {
    if (!sf.h_irreducible)
        throw ParameterError("norm_one_subgroup: residue ring is not a field");
    const BigInt order = norm_one_order(sf, s);
    if (order > opts.max_elements)
        throw CapacityError("norm_one_subgroup: subgroup too large to materialize");

    using Method = NormOneOptions::Method;
    std::vector<FieldElem> out;

    if (opts.method != Method::Exhaustive) {
        auto gen = find_field_generator(sf, opts.factor_bound);
        if (gen) {
            const BigInt t = subfield_power(sf, s);
            const FieldElem step = field_pow(*gen, t - 1, sf);
            FieldElem cur = field_one(sf);
            const uint64_t n = order.convert_to<uint64_t>();
            out.reserve(n);
            for (uint64_t k = 0; k < n; ++k) {
                out.push_back(cur);
                cur = field_mul(cur, step, sf);
            }
            if (!field_is_one(cur))
                throw VerificationError("norm_one_subgroup: generator power failed to close");
            std::sort(out.begin(), out.end());
            if (std::adjacent_find(out.begin(), out.end()) != out.end())
                throw VerificationError("norm_one_subgroup: repeated subgroup element");
            return out;
        }
        if (opts.method == Method::Generator)
            throw CapacityError("norm_one_subgroup: could not factor Q - 1 within bound");
    }

    // Exhaustive filter over F_Q^*.
    if (sf.Q > opts.exhaustive_bound)
        throw CapacityError("norm_one_subgroup: Q exceeds the exhaustive filter bound");
    FieldElem cand = field_zero(sf);
    while (next_vector(cand, sf.q))
        if (field_is_one(field_pow(cand, order, sf))) out.push_back(cand);
    if (BigInt(out.size()) != order)
        throw VerificationError("norm_one_subgroup: exhaustive count disagrees with the order");
    return out;
}

}  // namespace mcc
