#include "mcc/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mcc/errors.hpp"
#include "mcc/numtheory.hpp"

namespace mcc {

Codeword Codeword::zero(uint32_t q, uint32_t m, uint32_t s) {
    Codeword w;
    w.q = q;
    w.m = m;
    w.s = s;
    w.v.assign(std::size_t(m) * s, 0);
    return w;
}

Codeword Codeword::from_blocks(const std::vector<RingElement>& blocks) {
    if (blocks.empty()) throw ParameterError("Codeword: no blocks");
    Codeword w = zero(blocks[0].q, blocks[0].m, uint32_t(blocks.size()));
    for (uint32_t j = 0; j < w.s; ++j) w.set_block(j, blocks[j]);
    return w;
}

RingElement Codeword::block(uint32_t j) const {
    if (j >= s) throw ParameterError("Codeword: block index out of range");
    RingElement f = RingElement::zero(q, m);
    std::copy(v.begin() + std::size_t(j) * m, v.begin() + std::size_t(j + 1) * m, f.c.begin());
    return f;
}

void Codeword::set_block(uint32_t j, const RingElement& f) {
    if (j >= s) throw ParameterError("Codeword: block index out of range");
    if (f.q != q || f.m != m) throw ParameterError("Codeword: block ring mismatch");
    std::copy(f.c.begin(), f.c.end(), v.begin() + std::size_t(j) * m);
}

uint32_t Codeword::weight() const {
    return uint32_t(std::count_if(v.begin(), v.end(), [](uint32_t x) { return x != 0; }));
}

std::vector<RingElement> chain(const GroupParams& params, const RingElement& a1) {
    if (a1.q != params.q || a1.m != params.m) throw ParameterError("chain: ring mismatch");
    std::vector<RingElement> a;
    a.reserve(params.s - 1);
    a.push_back(a1);
    uint64_t rpow = params.r;
    for (uint32_t j = 2; j < params.s; ++j) {
        a.push_back(ring_mul(a.back(), multiplier(a1, rpow)));
        rpow = rpow * params.r % params.m;
    }
    return a;
}

bool norm_check(const GroupParams& params, const RingElement& a1) {
    if (a1.q != params.q || a1.m != params.m) throw ParameterError("norm_check: ring mismatch");
    RingElement prod = a1;
    uint64_t rpow = params.r;
    for (uint32_t k = 1; k < params.s; ++k) {
        prod = ring_mul(prod, multiplier(a1, rpow));
        rpow = rpow * params.r % params.m;
    }
    return prod == RingElement::one(params.q, params.m);
}

namespace {

MetacyclicCode assemble(const GroupParams& params, const RingElement& a1) {
    MetacyclicCode code;
    code.params = params;
    code.a = chain(params, a1);
    const uint32_t m = params.m, s = params.s;
    code.generator = GfMatrix(params.q, m, std::size_t(m) * s);
    for (uint32_t i = 0; i < m; ++i) {
        code.generator.at(i, i) = 1;  // block 0 carries x^i
        for (uint32_t j = 1; j < s; ++j) {
            const RingElement& aj = code.a[j - 1];
            for (uint32_t u = 0; u < m; ++u)
                code.generator.at(i, std::size_t(j) * m + (i + u) % m) = aj.c[u];
        }
    }
    code.rank = gf_rank(code.generator);
    return code;
}

}  // namespace

MetacyclicCode build_code(const GroupParams& params, const RingElement& a1) {
    if (!norm_check(params, a1))
        throw VerificationError("build_code: norm condition violated");
    return assemble(params, a1);
}

MetacyclicCode build_code_unchecked(const GroupParams& params, const RingElement& a1) {
    return assemble(params, a1);
}

Codeword x_action(const GroupParams& params, const Codeword& w) {
    Codeword out = Codeword::zero(w.q, w.m, w.s);
    for (uint32_t j = 0; j < w.s; ++j)
        for (uint32_t i = 0; i < w.m; ++i)
            out.v[std::size_t(j) * w.m + (i + 1) % w.m] = w.v[std::size_t(j) * w.m + i];
    (void)params;
    return out;
}

Codeword y_action(const GroupParams& params, const Codeword& w) {
    Codeword out = Codeword::zero(w.q, w.m, w.s);
    for (uint32_t j = 0; j < w.s; ++j)
        out.set_block((j + 1) % w.s, multiplier(w.block(j), params.r));
    return out;
}

Permutation compose(const Permutation& first, const Permutation& then) {
    if (first.size() != then.size()) throw ParameterError("compose: size mismatch");
    Permutation out(first.size());
    for (std::size_t p = 0; p < first.size(); ++p) out[p] = then[first[p]];
    return out;
}

Permutation perm_power(const Permutation& p, uint64_t e) {
    Permutation acc(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] = uint32_t(i);
    Permutation b = p;
    while (e) {
        if (e & 1) acc = compose(acc, b);
        e >>= 1;
        if (e) b = compose(b, b);
    }
    return acc;
}

bool is_identity(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

GroupAction group_action(uint32_t m, uint32_t s, uint64_t r) {
    if (m == 0 || s == 0) throw ParameterError("group_action: degenerate sizes");
    r %= m;
    if (std::gcd(r, uint64_t(m)) != 1) throw ParameterError("group_action: gcd(r, m) != 1");
    GroupAction act;
    act.m = m;
    act.s = s;
    act.r = uint32_t(r);
    const std::size_t n = std::size_t(m) * s;
    act.sigma_x.resize(n);
    act.sigma_y.resize(n);
    for (uint32_t j = 0; j < s; ++j) {
        for (uint32_t i = 0; i < m; ++i) {
            act.sigma_x[std::size_t(j) * m + i] = uint32_t(std::size_t(j) * m + (i + 1) % m);
            act.sigma_y[std::size_t(j) * m + i] =
                uint32_t(std::size_t((j + 1) % s) * m + uint32_t(r * i % m));
        }
    }
    if (!is_identity(perm_power(act.sigma_x, m)))
        throw VerificationError("group_action: sigma_x^m != id");
    if (!is_identity(perm_power(act.sigma_y, s)))
        throw VerificationError("group_action: sigma_y^s != id (is r^s = 1 mod m?)");
    if (compose(act.sigma_x, act.sigma_y) != compose(act.sigma_y, perm_power(act.sigma_x, r)))
        throw VerificationError("group_action: sigma_y.sigma_x != sigma_x^r.sigma_y");
    // Transitivity sweep.
    std::vector<uint8_t> seen(n, 0);
    std::vector<uint32_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const uint32_t p = stack.back();
        stack.pop_back();
        for (uint32_t img : {act.sigma_x[p], act.sigma_y[p]}) {
            if (!seen[img]) {
                seen[img] = 1;
                ++visited;
                stack.push_back(img);
            }
        }
    }
    if (visited != n) throw VerificationError("group_action: action is not transitive");
    return act;
}

GroupAction group_action(const GroupParams& params) {
    return group_action(params.m, params.s, params.r);
}

Codeword apply_permutation(const Codeword& w, const Permutation& sigma) {
    if (sigma.size() != w.v.size()) throw ParameterError("apply_permutation: size mismatch");
    Codeword out = w;
    for (std::size_t p = 0; p < sigma.size(); ++p) out.v[sigma[p]] = w.v[p];
    return out;
}

std::size_t generated_group_order(const GroupAction& act, std::size_t cap) {
    std::set<Permutation> seen{act.sigma_x, act.sigma_y};
    std::vector<Permutation> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier) {
            for (const auto* gen : {&act.sigma_x, &act.sigma_y}) {
                Permutation h = compose(g, *gen);
                if (seen.insert(h).second) next.push_back(std::move(h));
                if (seen.size() > cap)
                    throw CapacityError("generated_group_order: closure exceeded cap");
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

bool row_space_invariant(const GfMatrix& gen, const Permutation& sigma) {
    if (sigma.size() != gen.cols) throw ParameterError("row_space_invariant: size mismatch");
    const GfMatrix rref = gf_rref(gen);
    std::vector<uint32_t> image(gen.cols);
    for (std::size_t r = 0; r < gen.rows; ++r) {
        std::fill(image.begin(), image.end(), 0);
        for (std::size_t p = 0; p < gen.cols; ++p) image[sigma[p]] = gen.at(r, p);
        if (!in_row_space(rref, image)) return false;
    }
    return true;
}

bool proportionality_holds(const MetacyclicCode& code) {
    const GroupParams& P = code.params;
    std::vector<RingElement> blocks;
    blocks.push_back(RingElement::one(P.q, P.m));
    for (const auto& aj : code.a) blocks.push_back(aj);
    const Codeword gen_tuple = Codeword::from_blocks(blocks);
    const Codeword lhs = y_action(P, gen_tuple);
    const RingElement factor = multiplier(code.a.back(), P.r);
    for (uint32_t j = 0; j < P.s; ++j)
        if (!(lhs.block(j) == ring_mul(factor, blocks[j]))) return false;
    return true;
}

bool is_invariant(const MetacyclicCode& code) {
    const GroupAction act = group_action(code.params);
    return row_space_invariant(code.generator, act.sigma_x) &&
           row_space_invariant(code.generator, act.sigma_y) && proportionality_holds(code);
}

TwoSidedReport two_sided_check(const MetacyclicCode& code) {
    const GroupParams& P = code.params;
    TwoSidedReport rep;
    const RingElement one = RingElement::one(P.q, P.m);
    const RingElement& last = code.a.back();
    if (!(ring_pow(last, P.s) == one)) rep.violated.push_back("a_{s-1}^s != 1");
    for (uint32_t j = 1; j + 1 < P.s; ++j)
        if (!(code.a[j - 1] == ring_pow(last, P.s - j)))
            rep.violated.push_back("a_" + std::to_string(j) + " != a_{s-1}^{s-" +
                                   std::to_string(j) + "}");
    for (uint32_t j = 1; j < P.s; ++j) {
        const uint32_t shift = uint32_t((pow_mod(P.r, j, P.m) + P.m - 1) % P.m);
        const RingElement& aj = code.a[j - 1];
        if (!(ring_mul(aj, RingElement::monomial(P.q, P.m, shift)) == aj))
            rep.violated.push_back("a_" + std::to_string(j) + " != a_" + std::to_string(j) +
                                   " * x^(r^" + std::to_string(j) + " - 1)");
    }
    rep.two_sided = rep.violated.empty();
    return rep;
}

}  // namespace mcc
