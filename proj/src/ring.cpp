#include "mcc/ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.q != b.q || a.m != b.m)
        throw ParameterError("ring op: operands live in different rings");
}

void require_valid(uint32_t q, uint32_t m) {
    if (q < 2) throw ParameterError("ring: q must be at least 2");
    if (m < 1) throw ParameterError("ring: m must be positive");
}

}  // namespace

RingElement RingElement::zero(uint32_t q, uint32_t m) {
    require_valid(q, m);
    RingElement f;
    f.q = q;
    f.m = m;
    f.c.assign(m, 0);
    return f;
}

RingElement RingElement::one(uint32_t q, uint32_t m) {
    RingElement f = zero(q, m);
    f.c[0] = 1;
    return f;
}

RingElement RingElement::monomial(uint32_t q, uint32_t m, uint32_t i, uint32_t val) {
    RingElement f = zero(q, m);
    f.c[i % m] = val % q;
    return f;
}

RingElement RingElement::all_ones(uint32_t q, uint32_t m) {
    RingElement f = zero(q, m);
    f.c.assign(m, 1);
    return f;
}

RingElement RingElement::from_coeffs(uint32_t q, uint32_t m, std::vector<int64_t> raw) {
    require_valid(q, m);
    if (raw.size() != m) throw ParameterError("from_coeffs: expected exactly m coefficients");
    RingElement f = zero(q, m);
    for (uint32_t i = 0; i < m; ++i) {
        int64_t v = raw[i] % int64_t(q);
        if (v < 0) v += q;
        f.c[i] = uint32_t(v);
    }
    return f;
}

bool RingElement::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](uint32_t x) { return x == 0; });
}

bool lex_less(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

uint64_t lex_rank(const RingElement& f) {
    uint64_t rank = 0;
    for (uint32_t i = 0; i < f.m; ++i) rank = rank * f.q + f.c[i];
    return rank;
}

RingElement from_lex_rank(uint32_t q, uint32_t m, uint64_t rank) {
    RingElement f = RingElement::zero(q, m);
    for (uint32_t i = m; i-- > 0;) {
        f.c[i] = uint32_t(rank % q);
        rank /= q;
    }
    return f;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    RingElement out = a;
    for (uint32_t i = 0; i < a.m; ++i) {
        out.c[i] += b.c[i];
        if (out.c[i] >= a.q) out.c[i] -= a.q;
    }
    return out;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    RingElement out = a;
    for (uint32_t i = 0; i < a.m; ++i) {
        out.c[i] += a.q - b.c[i];
        if (out.c[i] >= a.q) out.c[i] -= a.q;
    }
    return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const uint32_t q = a.q, m = a.m;
    std::vector<uint64_t> acc(m, 0);
    for (uint32_t i = 0; i < m; ++i) {
        if (a.c[i] == 0) continue;
        for (uint32_t j = 0; j < m; ++j) {
            uint32_t k = i + j;
            if (k >= m) k -= m;
            acc[k] += uint64_t(a.c[i]) * b.c[j];
        }
    }
    RingElement out = RingElement::zero(q, m);
    for (uint32_t i = 0; i < m; ++i) out.c[i] = uint32_t(acc[i] % q);
    return out;
}

RingElement ring_scale(const RingElement& a, uint32_t lambda) {
    RingElement out = a;
    lambda %= a.q;
    for (uint32_t i = 0; i < a.m; ++i) out.c[i] = uint32_t(uint64_t(a.c[i]) * lambda % a.q);
    return out;
}

RingElement ring_pow(const RingElement& a, uint64_t e) {
    RingElement acc = RingElement::one(a.q, a.m);
    RingElement b = a;
    while (e) {
        if (e & 1) acc = ring_mul(acc, b);
        e >>= 1;
        if (e) b = ring_mul(b, b);
    }
    return acc;
}

RingElement multiplier(const RingElement& f, uint64_t r) {
    const uint32_t m = f.m;
    r %= m;
    if (std::gcd(r, uint64_t(m)) != 1)
        throw ParameterError("multiplier: r must be invertible mod m");
    RingElement out = RingElement::zero(f.q, m);
    for (uint32_t i = 0; i < m; ++i) out.c[uint32_t(r * i % m)] = f.c[i];
    return out;
}

uint32_t eval_at_one(const RingElement& f) {
    uint64_t sum = 0;
    for (uint32_t x : f.c) sum += x;
    return uint32_t(sum % f.q);
}

uint32_t weight(const RingElement& f) {
    return uint32_t(std::count_if(f.c.begin(), f.c.end(), [](uint32_t x) { return x != 0; }));
}

GfMatrix circulant_block(const RingElement& f) {
    GfMatrix mat(f.q, f.m, f.m);
    for (uint32_t i = 0; i < f.m; ++i)
        for (uint32_t j = 0; j < f.m; ++j) mat.at(i, (i + j) % f.m) = f.c[j];
    return mat;
}

RingElement from_circulant(const GfMatrix& block) {
    if (block.rows != block.cols) throw ParameterError("from_circulant: matrix must be square");
    RingElement f = RingElement::zero(block.q, uint32_t(block.cols));
    for (uint32_t j = 0; j < block.cols; ++j) f.c[j] = block.at(0, j);
    return f;
}

std::string to_string(const RingElement& f) {
    std::string out;
    for (uint32_t i = 0; i < f.m; ++i) {
        if (f.c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(f.c[i]);
            continue;
        }
        if (f.c[i] != 1) out += std::to_string(f.c[i]) + "*";
        out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string hex_pack(const RingElement& f) {
    static const char* digits = "0123456789abcdef";
    if (f.q > 256) throw CapacityError("hex_pack: coefficients exceed one byte");
    std::string out;
    out.reserve(2 * f.m);
    for (uint32_t i = 0; i < f.m; ++i) {
        out += digits[(f.c[i] >> 4) & 0xF];
        out += digits[f.c[i] & 0xF];
    }
    return out;
}

RingElement hex_unpack(uint32_t q, uint32_t m, const std::string& hex) {
    if (hex.size() != 2 * std::size_t(m)) throw ParameterError("hex_unpack: wrong length");
    auto nibble = [](char ch) -> uint32_t {
        if (ch >= '0' && ch <= '9') return uint32_t(ch - '0');
        if (ch >= 'a' && ch <= 'f') return uint32_t(ch - 'a' + 10);
        if (ch >= 'A' && ch <= 'F') return uint32_t(ch - 'A' + 10);
        throw ParameterError("hex_unpack: bad hex digit");
    };
    RingElement f = RingElement::zero(q, m);
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t v = (nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]);
        if (v >= q) throw ParameterError("hex_unpack: coefficient out of range");
        f.c[i] = v;
    }
    return f;
}

}  // namespace mcc
