#include "mcc/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mcc {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t mod) {
    return uint64_t((unsigned __int128)a * b % mod);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    if (mod == 0) throw ParameterError("pow_mod: zero modulus");
    if (mod == 1) return 0;
    uint64_t acc = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = mul_mod(acc, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return acc;
}

namespace {

bool composite_witness(uint64_t n, uint64_t a, uint64_t d, int r) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a certifies n composite
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set decides primality for every n < 3.3 * 10^24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (composite_witness(n, a, d, r)) return false;
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho; n must be odd composite, not a prime power issue.
uint64_t rho_factor(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mul_mod(y, y, n) + c) % n;
            ++lam;
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    if (n == 0) throw ParameterError("factorize: zero");
    std::vector<uint64_t> primes;
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    for (uint64_t p = 7; p < 1'000'000 && p * p <= n; p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

uint64_t mult_order(uint64_t a, uint64_t m) {
    if (m < 2) throw ParameterError("mult_order: modulus must exceed 1");
    a %= m;
    if (std::gcd(a, m) != 1) throw ParameterError("mult_order: base not coprime to modulus");
    if (!is_prime(m)) throw ParameterError("mult_order: modulus must be prime");
    uint64_t ord = m - 1;
    for (auto [p, e] : factorize(m - 1)) {
        (void)e;
        while (ord % p == 0 && pow_mod(a, ord / p, m) == 1) ord /= p;
    }
    return ord;
}

std::optional<std::vector<std::pair<BigInt, int>>> factorize_big(BigInt n, uint64_t bound) {
    if (n <= 0) throw ParameterError("factorize_big: argument must be positive");
    std::vector<std::pair<BigInt, int>> out;
    auto push = [&out](const BigInt& p, int e) {
        if (!out.empty() && out.back().first == p)
            out.back().second += e;
        else
            out.push_back({p, e});
    };
    for (uint64_t p = 2; p <= bound && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            push(BigInt(p), 1);
            n /= p;
        }
        if (n == 1) break;
    }
    if (n == 1) return out;
    // Cofactor: prime, prime power, or give up.
    auto prime_big = [](const BigInt& v) {
        return v <= std::numeric_limits<uint64_t>::max() && is_prime(v.convert_to<uint64_t>());
    };
    if (prime_big(n)) {
        push(n, 1);
        return out;
    }
    for (int k = 2; k <= 6; ++k) {
        BigInt root = [&] {
            BigInt lo = 1, hi = n;
            while (lo < hi) {  // smallest x with x^k >= n
                BigInt mid = (lo + hi) / 2;
                if (big_pow(mid, k) < n)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            return lo;
        }();
        if (big_pow(root, k) == n && prime_big(root)) {
            push(root, k);
            return out;
        }
    }
    return std::nullopt;
}

PrimeStream::PrimeStream() : block_lo_(0), base_limit_(0), idx_(0) {}

void PrimeStream::refill() {
    constexpr uint64_t kBlock = 1 << 16;
    while (pending_.empty() || idx_ >= pending_.size()) {
        const uint64_t lo = block_lo_, hi = lo + kBlock;
        uint64_t need = uint64_t(std::sqrt(double(hi))) + 2;
        if (need > base_limit_) {
            // Rebuild the sieving primes with a plain sieve; amortized cheap.
            base_limit_ = std::max<uint64_t>(need * 2, 1 << 10);
            std::vector<uint8_t> mark(base_limit_ + 1, 1);
            base_.clear();
            for (uint64_t i = 2; i <= base_limit_; ++i) {
                if (!mark[i]) continue;
                base_.push_back(i);
                for (uint64_t j = i * i; j <= base_limit_; j += i) mark[j] = 0;
            }
        }
        std::vector<uint8_t> mark(kBlock, 1);
        if (lo == 0) mark[0] = mark[1] = 0;
        for (uint64_t p : base_) {
            if (p * p >= hi) break;
            uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (uint64_t j = start; j < hi; j += p)
                if (j >= lo) mark[j - lo] = 0;
        }
        pending_.clear();
        idx_ = 0;
        for (uint64_t i = 0; i < kBlock; ++i)
            if (mark[i]) pending_.push_back(lo + i);
        block_lo_ = hi;
    }
}

uint64_t PrimeStream::next() {
    if (pending_.empty() || idx_ >= pending_.size()) refill();
    return pending_[idx_++];
}

ArtinBase artin_base(int64_t a) {
    ArtinBase base;
    base.a = a;
    if (a == 0) {
        base.h = 1;
        base.d = 0;
        base.delta = 0;
        return base;
    }
    const uint64_t mag = a < 0 ? uint64_t(-(a + 1)) + 1 : uint64_t(a);
    if (mag == 1) {
        base.h = 1;
        base.d = a < 0 ? -1 : 1;
    } else {
        auto factors = factorize(mag);
        uint64_t g = 0;
        for (auto [p, e] : factors) {
            (void)p;
            g = std::gcd(g, uint64_t(e));
        }
        if (a < 0)
            while (g % 2 == 0) g /= 2;  // negative numbers are odd powers only
        base.h = g;
        int64_t d = 1;
        for (auto [p, e] : factors)
            if (e % 2 == 1) d *= int64_t(p);
        base.d = a < 0 ? -d : d;
    }
    const int64_t mod4 = ((base.d % 4) + 4) % 4;
    base.delta = (mod4 == 1) ? base.d : 4 * base.d;
    return base;
}

AdmissibilityVerdict admissibility(int64_t a, uint64_t s) {
    if (s == 0) throw ParameterError("admissibility: s must be positive");
    AdmissibilityVerdict v;
    v.base = artin_base(a);
    v.s = s;
    if (a == 0) v.reasons.push_back("a is 0");
    if (a == -1) v.reasons.push_back("a is -1");
    if (a > 0 && v.base.d == 1) v.reasons.push_back("a is a perfect square");
    if (v.reasons.empty()) {
        if (std::gcd(s, v.base.h) > 1) v.reasons.push_back("gcd(s, h) exceeds 1");
        const uint64_t abs_delta = uint64_t(std::abs(v.base.delta));
        if (abs_delta != 0 && s % abs_delta == 0) v.reasons.push_back("delta divides s");
    }
    v.admissible = v.reasons.empty();
    return v;
}

ArtinPrimes artin_primes(int64_t a, uint64_t s, std::size_t count, uint64_t limit) {
    auto verdict = admissibility(a, s);
    if (!verdict.admissible) {
        std::string msg = "artin_primes: inadmissible pair (a, s):";
        for (const auto& r : verdict.reasons) msg += " " + r + ";";
        throw InadmissibleError(msg, verdict);
    }
    if (limit > (uint64_t(1) << 62)) throw CapacityError("artin_primes: limit too large");
    ArtinPrimes out;
    const uint64_t mag = a < 0 ? uint64_t(-(a + 1)) + 1 : uint64_t(a);
    PrimeStream stream;
    while (out.rows.size() < count) {
        const uint64_t m = stream.next();
        if (m > limit) {
            out.exhausted_limit = true;
            break;
        }
        if (m % s != 1 % s) continue;
        if (mag % m == 0) continue;
        const uint64_t residue = ((a % int64_t(m)) + int64_t(m)) % int64_t(m);
        const uint64_t ord = mult_order(residue, m);
        if (ord != m - 1) continue;
        out.rows.push_back({m, ord, m % s});
    }
    return out;
}

DensityReport empirical_density(int64_t a, uint64_t s, uint64_t limit) {
    auto verdict = admissibility(a, s);
    if (!verdict.admissible) {
        std::string msg = "empirical_density: inadmissible pair (a, s):";
        for (const auto& r : verdict.reasons) msg += " " + r + ";";
        throw InadmissibleError(msg, verdict);
    }
    if (limit < 2) return {};
    if (limit > 100'000'000) throw CapacityError("empirical_density: limit too large");
    DensityReport rep;
    const uint64_t mag = a < 0 ? uint64_t(-(a + 1)) + 1 : uint64_t(a);
    std::vector<uint8_t> mark(limit + 1, 1);
    mark[0] = mark[1] = 0;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    for (uint64_t m = 2; m <= limit; ++m) {
        if (!mark[m]) continue;
        if (m % s != 1 % s) continue;
        ++rep.progression;
        if (mag % m == 0) continue;
        const uint64_t residue = ((a % int64_t(m)) + int64_t(m)) % int64_t(m);
        if (mult_order(residue, m) == m - 1) ++rep.qualifying;
    }
    rep.ratio = rep.progression ? double(rep.qualifying) / double(rep.progression) : 0.0;
    return rep;
}

double artin_constant(uint64_t prime_limit) {
    long double acc = 1.0L;
    PrimeStream stream;
    for (uint64_t p = stream.next(); p <= prime_limit; p = stream.next())
        acc *= 1.0L - 1.0L / ((long double)p * (long double)(p - 1));
    return double(acc);
}

}  // namespace mcc
