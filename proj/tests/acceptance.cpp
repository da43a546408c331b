// Acceptance gate. Runs the end-to-end checks the library is contractually
// held to, one line per criterion, and exits nonzero when any of them fails.
// Criterion 9 drives the installed CLI binary, passed as --cli <path>.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcc/bounds.hpp"
#include "mcc/code.hpp"
#include "mcc/crt.hpp"
#include "mcc/distance.hpp"
#include "mcc/enumerate.hpp"
#include "mcc/numtheory.hpp"
#include "mcc/params.hpp"
#include "mcc/ring.hpp"
#include "mcc/search.hpp"

namespace {

using namespace mcc;

std::string g_cli;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

struct Instance {
    uint32_t q, m, s;
    uint64_t r;
    uint64_t count;
};

const std::vector<Instance>& family() {
    static const std::vector<Instance> v = {
        {2, 5, 2, 4, 5},   {3, 5, 2, 4, 20},   {3, 7, 3, 2, 91},
        {2, 11, 2, 10, 33}, {2, 13, 3, 3, 273},
    };
    return v;
}

GroupParams params_of(const Instance& in) {
    return validate(in.q, in.m, in.s, in.r, Regime::Counting);
}

bool same_set(std::vector<RingElement> a, std::vector<RingElement> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    return a == b;
}

// 1. Both enumeration routes agree with the closed-form count on every instance.
bool counting() {
    for (const auto& in : family()) {
        const auto params = params_of(in);
        if (omega(params).value != BigInt(in.count)) {
            note("count formula mismatch at m=" + std::to_string(in.m));
            return false;
        }
        const auto brute = enumerate_bruteforce(params);
        const auto crt = enumerate_crt(params);
        if (brute.size() != in.count || !same_set(brute, crt)) {
            note("enumeration mismatch at m=" + std::to_string(in.m));
            return false;
        }
    }
    return true;
}

// 2. Every enumerated code is invariant under both generators and satisfies
//    the proportionality identity.
bool invariance() {
    for (const auto& in : family()) {
        const auto params = params_of(in);
        for (const auto& a1 : enumerate_valid(params)) {
            const auto code = build_code(params, a1);
            if (!is_invariant(code) || !proportionality_holds(code)) {
                note("invariance failure at m=" + std::to_string(in.m));
                return false;
            }
        }
    }
    return true;
}

// 3. No low-weight vector lies in more than q codes; dropping the weight
//    filter must expose a vector shared by more than q codes.
bool covering() {
    for (const auto& in : family()) {
        const auto rep = cover_multiplicity(params_of(in));
        if (!rep.within_bound || rep.max_multiplicity > in.q) {
            note("multiplicity " + std::to_string(rep.max_multiplicity) +
                 " at m=" + std::to_string(in.m));
            return false;
        }
    }
    CoverOptions loose;
    loose.weight_filter = false;
    const auto neg = cover_multiplicity(params_of(family()[0]), loose);
    if (neg.max_multiplicity <= 2) {
        note("negative control did not exceed q");
        return false;
    }
    return true;
}

// 4. The counting bound guarantees distance 1 on the largest instance, and the
//    exhaustive sweep finds a code strictly beating it.
bool existence_bound() {
    const auto params = validate(2, 13, 3, 3, Regime::Counting);
    const auto rep = guaranteed_distance(params);
    if (rep.guaranteed_d != 1) {
        note("guaranteed_d = " + std::to_string(rep.guaranteed_d));
        return false;
    }
    uint32_t best = 0;
    for (const auto& a1 : enumerate_valid(params))
        best = std::max(best, min_distance(build_code(params, a1)).d_min);
    if (best < 2) {
        note("no code with d_min >= 2; best = " + std::to_string(best));
        return false;
    }
    return true;
}

// 5. Entropy inverse lands in the stated window, inverts exactly on a grid,
//    and ball volumes hit their closed-form values.
bool entropy_and_volumes() {
    const double delta = entropy_inverse(0.25, 2);
    if (delta < 0.0405 || delta > 0.0425) {
        note("entropy_inverse(0.25, 2) = " + std::to_string(delta));
        return false;
    }
    for (int i = 1; i <= 100; ++i) {
        const double y = i / 100.0;
        if (std::abs(entropy(entropy_inverse(y, 2), 2) - y) > 1e-9) {
            note("grid failure at y = " + std::to_string(y));
            return false;
        }
    }
    if (ball_volume(4, 1, 3) != 9 || ball_volume(10, 10, 2) != 1024) {
        note("ball volume mismatch");
        return false;
    }
    return true;
}

// 6. The prime stream emits the frozen prefixes and the admissibility filter
//    rejects for the right reasons.
bool prime_stream() {
    const auto check = [](int64_t a, uint64_t s, const std::vector<uint64_t>& want) {
        const auto got = artin_primes(a, s, want.size());
        if (got.rows.size() != want.size()) return false;
        for (std::size_t i = 0; i < want.size(); ++i)
            if (got.rows[i].m != want[i]) return false;
        return true;
    };
    if (!check(2, 2, {3, 5, 11, 13, 19, 29}) || !check(3, 2, {5, 7, 17})) {
        note("prime stream prefix mismatch");
        return false;
    }
    const auto has = [](const AdmissibilityVerdict& v, const std::string& reason) {
        return std::find(v.reasons.begin(), v.reasons.end(), reason) != v.reasons.end();
    };
    if (!admissibility(2, 2).admissible) {
        note("(2, 2) rejected");
        return false;
    }
    const auto v55 = admissibility(5, 5);
    if (v55.admissible || !has(v55, "delta divides s")) {
        note("(5, 5) verdict wrong");
        return false;
    }
    const auto v83 = admissibility(8, 3);
    if (v83.admissible || !has(v83, "gcd(s, h) exceeds 1")) {
        note("(8, 3) verdict wrong");
        return false;
    }
    return true;
}

// 7. The measured share of primes with 2 primitive tracks the prime-product
//    constant.
bool density() {
    const double c = artin_constant();
    if (std::abs(c - 0.3739558) > 1e-6) {
        note("prime product constant = " + std::to_string(c));
        return false;
    }
    const auto rep = empirical_density(2, 2, 100000);
    if (std::abs(rep.ratio - c) > 0.02) {
        note("ratio = " + std::to_string(rep.ratio));
        return false;
    }
    return true;
}

// 8. No enumerated code is a two-sided ideal, and the all-ones element obeys
//    e^s = (m^{s-1} mod q) e in every ring tried.
bool one_sidedness() {
    for (const auto& in : family()) {
        const auto params = params_of(in);
        for (const auto& a1 : enumerate_valid(params))
            if (two_sided_check(build_code(params, a1)).two_sided) {
                note("two-sided code at m=" + std::to_string(in.m));
                return false;
            }
    }
    std::mt19937_64 gen(12345);
    const uint32_t qs[] = {2, 3, 5, 7, 11, 13};
    const uint32_t ms[] = {3, 5, 7, 11, 13, 17, 19};
    for (int trial = 0; trial < 50; ++trial) {
        const uint32_t q = qs[gen() % 6];
        uint32_t m = ms[gen() % 7];
        while (m == q) m = ms[gen() % 7];
        const uint64_t s = 2 + gen() % 7;
        const auto e = RingElement::all_ones(q, m);
        const auto lambda = uint32_t(pow_mod(m % q, s - 1, q));
        if (!(ring_pow(e, s) == ring_scale(e, lambda))) {
            note("all-ones identity failed at q=" + std::to_string(q) +
                 " m=" + std::to_string(m) + " s=" + std::to_string(s));
            return false;
        }
    }
    return true;
}

// 9. The CLI search is byte-identical across repeated runs and worker counts,
//    and its best distance equals the exhaustive family maximum.
bool reproducibility() {
    if (g_cli.empty()) {
        note("no --cli path given");
        return false;
    }
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path();
    const auto run = [&](const std::string& extra, const fs::path& out) {
        const std::string cmd = "\"" + g_cli +
                                "\" search --q 2 --m 11 --s 2 --r 10 --trials 200 --seed 42" +
                                extra + " > \"" + out.string() + "\" 2>/dev/null";
        return std::system(cmd.c_str()) == 0;
    };
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const fs::path outs[] = {dir / "mcc_accept_run1.txt", dir / "mcc_accept_run2.txt",
                             dir / "mcc_accept_t1.txt", dir / "mcc_accept_t4.txt"};
    const std::string extras[] = {"", "", " --threads 1", " --threads 4"};
    for (int i = 0; i < 4; ++i)
        if (!run(extras[i], outs[i])) {
            note("cli run failed");
            return false;
        }
    const std::string base = slurp(outs[0]);
    for (int i = 1; i < 4; ++i)
        if (slurp(outs[i]) != base) {
            note("outputs differ between runs");
            return false;
        }
    for (const auto& p : outs) fs::remove(p);

    uint32_t cli_d = 0;
    std::istringstream lines(base);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind("d_min: ", 0) == 0) cli_d = uint32_t(std::stoul(line.substr(7)));
    const auto params = validate(2, 11, 2, 10, Regime::Counting);
    uint32_t best = 0;
    for (const auto& a1 : enumerate_valid(params))
        best = std::max(best, min_distance(build_code(params, a1)).d_min);
    if (cli_d != best) {
        note("cli found " + std::to_string(cli_d) + ", exhaustive max " + std::to_string(best));
        return false;
    }
    return true;
}

// 10. The splitting map is a bijective ring morphism: exhaustively for the
//     smallest binary ring, on random pairs for a ternary one.
bool splitting() {
    FieldElem (*field_add)(const FieldElem&, const FieldElem&, uint32_t) =
        [](const FieldElem& a, const FieldElem& b, uint32_t q) {
            FieldElem out(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % q;
            return out;
        };
    const auto morphism_ok = [&](const RingElement& f, const RingElement& g,
                                 const SplitFactors& sf) {
        const auto df = crt_decompose(f, sf);
        const auto dg = crt_decompose(g, sf);
        const auto dmul = crt_decompose(ring_mul(f, g), sf);
        const auto dadd = crt_decompose(ring_add(f, g), sf);
        return dmul.scalar == (df.scalar * dg.scalar) % sf.q &&
               dmul.field_part == field_mul(df.field_part, dg.field_part, sf) &&
               dadd.scalar == (df.scalar + dg.scalar) % sf.q &&
               dadd.field_part == field_add(df.field_part, dg.field_part, sf.q);
    };

    const auto sf2 = split(2, 5);
    std::vector<RingElement> all;
    for (uint64_t rank = 0; rank < 32; ++rank) all.push_back(from_lex_rank(2, 5, rank));
    for (const auto& f : all) {
        if (!(crt_recombine(crt_decompose(f, sf2), sf2) == f)) {
            note("roundtrip failure over the binary ring");
            return false;
        }
        for (const auto& g : all)
            if (!morphism_ok(f, g, sf2)) {
                note("morphism failure over the binary ring");
                return false;
            }
    }

    const auto sf3 = split(3, 7);
    std::mt19937_64 gen(987654321);
    const auto random_elem = [&] {
        RingElement f = RingElement::zero(3, 7);
        for (auto& c : f.c) c = uint32_t(gen() % 3);
        return f;
    };
    for (int i = 0; i < 10000; ++i) {
        const auto f = random_elem();
        const auto g = random_elem();
        if (!(crt_recombine(crt_decompose(f, sf3), sf3) == f) || !morphism_ok(f, g, sf3)) {
            note("random case failure over the ternary ring");
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    bool (*fn)();
    double time_limit;  // seconds, 0 = none
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];

    const Criterion table[] = {
        {1, "enumeration equals the closed-form count", counting, 120.0},
        {2, "every code invariant and proportional", invariance, 0.0},
        {3, "cover multiplicity at most q", covering, 0.0},
        {4, "bound guarantees d > 1, sweep confirms", existence_bound, 300.0},
        {5, "entropy inverse and ball volumes", entropy_and_volumes, 0.0},
        {6, "prime stream and admissibility verdicts", prime_stream, 0.0},
        {7, "empirical density near the prime product", density, 30.0},
        {8, "one-sidedness and the all-ones identity", one_sidedness, 0.0},
        {9, "seeded search byte-reproducible and optimal", reproducibility, 0.0},
        {10, "splitting is a ring isomorphism", splitting, 0.0},
    };

    int failed = 0;
    for (const auto& c : table) {
        g_notes.clear();
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            note(e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit > 0.0 && secs > c.time_limit) {
            ok = false;
            note("exceeded " + std::to_string(c.time_limit) + "s");
        }
        std::printf("criterion %2d  %-46s %s  %7.2fs\n", c.id, c.label,
                    ok ? "PASS" : "FAIL", secs);
        for (const auto& msg : g_notes) std::printf("              -> %s\n", msg.c_str());
        if (!ok) ++failed;
    }
    std::printf("acceptance: %d/10 passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
