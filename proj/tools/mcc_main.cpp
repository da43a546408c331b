#include <cstdint>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mcc/bounds.hpp"
#include "mcc/code.hpp"
#include "mcc/descriptor.hpp"
#include "mcc/distance.hpp"
#include "mcc/enumerate.hpp"
#include "mcc/errors.hpp"
#include "mcc/numtheory.hpp"
#include "mcc/params.hpp"
#include "mcc/ring.hpp"
#include "mcc/search.hpp"

namespace {

using namespace mcc;
using nlohmann::json;

enum class Format { Table, Csv, JsonLines };

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    return Format::JsonLines;
}

void add_format(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format: table, csv, json-lines")
        ->check(CLI::IsMember({"table", "csv", "json-lines"}))
        ->capture_default_str();
}

// The resolved configuration goes to stderr so stdout carries nothing but results.
void echo_config(const std::string& name,
                 const std::vector<std::pair<std::string, std::string>>& kv) {
    std::cerr << "config: command=" << name;
    for (const auto& [k, v] : kv) std::cerr << " " << k << "=" << v;
    std::cerr << "\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// a_1..a_{s-1} as colon-separated hex blocks, the CSV wire form of a code.
std::string hex_of_code(const MetacyclicCode& code) {
    std::vector<std::string> parts;
    for (const auto& aj : code.a) parts.push_back(hex_pack(aj));
    return join(parts, ":");
}

std::string hex_of_word(const Codeword& w) {
    std::vector<std::string> parts;
    for (uint32_t j = 0; j < w.s; ++j) parts.push_back(hex_pack(w.block(j)));
    return join(parts, ":");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct ParamFlags {
    uint64_t q = 0, m = 0, s = 0, r = 0;
    std::string regime = "counting";
};

void add_params(CLI::App* cmd, ParamFlags& p, bool with_regime = false) {
    cmd->add_option("--q", p.q, "field size, prime")->required();
    cmd->add_option("--m", p.m, "cycle length, odd prime")->required();
    cmd->add_option("--s", p.s, "block count")->required();
    cmd->add_option("--r", p.r, "twist exponent")->required();
    if (with_regime)
        cmd->add_option("--regime", p.regime, "counting or construction")
            ->check(CLI::IsMember({"counting", "construction"}))
            ->capture_default_str();
}

GroupParams resolve(const ParamFlags& p) {
    const Regime regime =
        p.regime == "construction" ? Regime::Construction : Regime::Counting;
    return validate(p.q, p.m, p.s, p.r, regime);
}

// ---------------------------------------------------------------- artin-primes

void register_artin_primes(CLI::App& app) {
    struct Opts {
        int64_t a = 0;
        uint64_t s = 0, limit = uint64_t(1) << 31;
        std::size_t count = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("artin-primes",
                                   "primes m = 1 (mod s) with the base a primitive mod m");
    cmd->add_option("--a,--q", opt->a, "base whose primitivity is required")->required();
    cmd->add_option("--s", opt->s, "progression modulus")->required();
    cmd->add_option("--count", opt->count, "how many primes to emit")->required();
    cmd->add_option("--limit", opt->limit, "largest prime considered")->capture_default_str();
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("artin-primes", {{"a", std::to_string(opt->a)},
                                     {"s", std::to_string(opt->s)},
                                     {"count", std::to_string(opt->count)},
                                     {"limit", std::to_string(opt->limit)},
                                     {"format", opt->format}});
        const auto got = artin_primes(opt->a, opt->s, opt->count, opt->limit);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << std::setw(12) << "m" << std::setw(12) << "ord" << std::setw(10)
                          << "residue" << "\n";
                for (const auto& row : got.rows)
                    std::cout << std::setw(12) << row.m << std::setw(12) << row.ord
                              << std::setw(10) << row.residue << "\n";
                if (got.exhausted_limit) std::cout << "limit exhausted\n";
                break;
            case Format::Csv:
                std::cout << "m,ord,residue\n";
                for (const auto& row : got.rows)
                    std::cout << row.m << "," << row.ord << "," << row.residue << "\n";
                break;
            case Format::JsonLines:
                for (const auto& row : got.rows) {
                    json j{{"m", row.m}, {"ord", row.ord}, {"residue", row.residue}};
                    std::cout << j.dump() << "\n";
                }
                json tail{{"count", got.rows.size()}, {"exhausted_limit", got.exhausted_limit}};
                std::cout << tail.dump() << "\n";
                break;
        }
    });
}

// ------------------------------------------------------------------ admissible

void register_admissible(CLI::App& app) {
    struct Opts {
        int64_t a = 0;
        uint64_t s = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("admissible", "check the (a, s) admissibility conditions");
    cmd->add_option("--a", opt->a, "base")->required();
    cmd->add_option("--s", opt->s, "progression modulus")->required();
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("admissible", {{"a", std::to_string(opt->a)},
                                   {"s", std::to_string(opt->s)},
                                   {"format", opt->format}});
        const auto v = admissibility(opt->a, opt->s);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << "admissible: " << yes_no(v.admissible) << "\n";
                std::cout << "h: " << v.base.h << "\n";
                std::cout << "d: " << v.base.d << "\n";
                std::cout << "delta: " << v.base.delta << "\n";
                if (!v.reasons.empty())
                    std::cout << "reasons: " << join(v.reasons, "; ") << "\n";
                break;
            case Format::Csv:
                std::cout << "a,s,admissible,h,d,delta,reasons\n";
                std::cout << opt->a << "," << opt->s << "," << (v.admissible ? 1 : 0) << ","
                          << v.base.h << "," << v.base.d << "," << v.base.delta << ","
                          << join(v.reasons, "|") << "\n";
                break;
            case Format::JsonLines:
                json j{{"a", opt->a},         {"s", opt->s},
                       {"admissible", v.admissible}, {"h", v.base.h},
                       {"d", v.base.d},       {"delta", v.base.delta},
                       {"reasons", v.reasons}};
                std::cout << j.dump() << "\n";
                break;
        }
    });
}

// ---------------------------------------------------------------- params-check

void register_params_check(CLI::App& app) {
    struct Opts {
        ParamFlags p;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("params-check", "validate a parameter quadruple");
    add_params(cmd, opt->p, true);
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("params-check", {{"q", std::to_string(opt->p.q)},
                                     {"m", std::to_string(opt->p.m)},
                                     {"s", std::to_string(opt->p.s)},
                                     {"r", std::to_string(opt->p.r)},
                                     {"regime", opt->p.regime},
                                     {"format", opt->format}});
        const Regime regime =
            opt->p.regime == "construction" ? Regime::Construction : Regime::Counting;
        const auto chk = check_params(opt->p.q, opt->p.m, opt->p.s, opt->p.r, regime);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << "ok: " << yes_no(chk.ok) << "\n";
                for (const auto& v : chk.violations) std::cout << "violation: " << v << "\n";
                break;
            case Format::Csv:
                std::cout << "ok,violations\n";
                std::cout << (chk.ok ? 1 : 0) << "," << join(chk.violations, "|") << "\n";
                break;
            case Format::JsonLines:
                json j{{"ok", chk.ok}, {"violations", chk.violations}};
                std::cout << j.dump() << "\n";
                break;
        }
        if (!chk.ok) throw ParameterError("params-check: " + join(chk.violations, "; "));
    });
}

// ----------------------------------------------------------------------- omega

void register_omega(CLI::App& app) {
    struct Opts {
        uint64_t q = 0, m = 0, s = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("omega", "count the codes the construction yields");
    cmd->add_option("--q", opt->q, "field size, prime")->required();
    cmd->add_option("--m", opt->m, "cycle length, odd prime")->required();
    cmd->add_option("--s", opt->s, "block count")->required();
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("omega", {{"q", std::to_string(opt->q)},
                              {"m", std::to_string(opt->m)},
                              {"s", std::to_string(opt->s)},
                              {"format", opt->format}});
        const auto w = omega(uint32_t(opt->q), uint32_t(opt->m), uint32_t(opt->s));
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << w.value.str() << "\n";
                break;
            case Format::Csv:
                std::cout << "q,m,s,s_prime,t,omega\n";
                std::cout << opt->q << "," << opt->m << "," << opt->s << "," << w.s_prime << ","
                          << w.t.str() << "," << w.value.str() << "\n";
                break;
            case Format::JsonLines:
                json j{{"q", opt->q},           {"m", opt->m},
                       {"s", opt->s},           {"s_prime", w.s_prime},
                       {"t", w.t.str()},        {"omega", w.value.str()}};
                std::cout << j.dump() << "\n";
                break;
        }
    });
}

// ------------------------------------------------------------------- enumerate

void register_enumerate(CLI::App& app) {
    struct Opts {
        ParamFlags p;
        bool distance = false;
        int threads = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("enumerate", "list every valid generator element");
    add_params(cmd, opt->p);
    cmd->add_flag("--distance", opt->distance, "also compute each code's minimum distance");
    cmd->add_option("--threads", opt->threads, "worker cap, 0 = library default");
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("enumerate", {{"q", std::to_string(opt->p.q)},
                                  {"m", std::to_string(opt->p.m)},
                                  {"s", std::to_string(opt->p.s)},
                                  {"r", std::to_string(opt->p.r)},
                                  {"distance", yes_no(opt->distance)},
                                  {"threads", std::to_string(opt->threads)},
                                  {"format", opt->format}});
        const auto params = resolve(opt->p);
        EnumerateOptions eopts;
        eopts.threads = opt->threads;
        const auto a1s = enumerate_valid(params, eopts);

        const Format fmt = parse_format(opt->format);
        if (fmt == Format::Csv)
            std::cout << (opt->distance ? "index,a,d_min\n" : "index,a\n");
        for (std::size_t i = 0; i < a1s.size(); ++i) {
            const auto code = build_code(params, a1s[i]);
            uint32_t d = 0;
            if (opt->distance) {
                DistanceOptions dopts;
                dopts.threads = opt->threads;
                d = min_distance(code, dopts).d_min;
            }
            switch (fmt) {
                case Format::Table:
                    std::cout << std::setw(8) << i << "  " << hex_of_code(code);
                    if (opt->distance) std::cout << "  d=" << d;
                    std::cout << "\n";
                    break;
                case Format::Csv:
                    std::cout << i << "," << hex_of_code(code);
                    if (opt->distance) std::cout << "," << d;
                    std::cout << "\n";
                    break;
                case Format::JsonLines: {
                    json j = descriptor_json(code);
                    if (opt->distance) j["d_min"] = d;
                    std::cout << j.dump() << "\n";
                    break;
                }
            }
        }
        if (fmt == Format::Table) std::cout << "count: " << a1s.size() << "\n";
    });
}

// -------------------------------------------------------------------- distance

void register_distance(CLI::App& app) {
    struct Opts {
        std::string file;
        uint64_t guard = uint64_t(1) << 26;
        bool override_guard = false;
        int threads = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("distance", "exact minimum distance of a stored code");
    cmd->add_option("file", opt->file, "code descriptor path")->required();
    cmd->add_option("--guard", opt->guard, "largest q^m walked")->capture_default_str();
    cmd->add_flag("--override-guard", opt->override_guard, "walk past the guard anyway");
    cmd->add_option("--threads", opt->threads, "worker cap, 0 = library default");
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("distance", {{"file", opt->file},
                                 {"guard", std::to_string(opt->guard)},
                                 {"override_guard", yes_no(opt->override_guard)},
                                 {"threads", std::to_string(opt->threads)},
                                 {"format", opt->format}});
        const auto code = load_descriptor_file(opt->file);
        DistanceOptions dopts;
        dopts.guard = opt->guard;
        dopts.override_guard = opt->override_guard;
        dopts.threads = opt->threads;
        const auto res = min_distance(code, dopts);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << "d_min: " << res.d_min << "\n";
                std::cout << "witness: " << hex_of_word(res.witness) << "\n";
                std::cout << "enumerated: " << res.enumerated << "\n";
                break;
            case Format::Csv:
                std::cout << "d_min,witness_weight,enumerated,witness\n";
                std::cout << res.d_min << "," << res.witness.weight() << "," << res.enumerated
                          << "," << hex_of_word(res.witness) << "\n";
                break;
            case Format::JsonLines:
                json j{{"d_min", res.d_min},
                       {"witness", hex_of_word(res.witness)},
                       {"witness_weight", res.witness.weight()},
                       {"enumerated", res.enumerated}};
                std::cout << j.dump() << "\n";
                break;
        }
    });
}

// ---------------------------------------------------------------------- verify

void register_verify(CLI::App& app) {
    struct Opts {
        std::string file;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("verify",
                                   "recheck a stored code: norm, invariance, right-ideal test");
    cmd->add_option("file", opt->file, "code descriptor path")->required();
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("verify", {{"file", opt->file}, {"format", opt->format}});
        const auto code = load_descriptor_file(opt->file);  // norm and chain enforced here
        const auto act = group_action(code.params);
        const bool sx = row_space_invariant(code.generator, act.sigma_x);
        const bool sy = row_space_invariant(code.generator, act.sigma_y);
        const bool prop = proportionality_holds(code);
        const auto ts = two_sided_check(code);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << "norm: ok\n";
                std::cout << "sigma_x invariance: " << (sx ? "ok" : "violated") << "\n";
                std::cout << "sigma_y invariance: " << (sy ? "ok" : "violated") << "\n";
                std::cout << "proportionality: " << (prop ? "ok" : "violated") << "\n";
                std::cout << "two_sided: " << yes_no(ts.two_sided) << "\n";
                if (!ts.violated.empty())
                    std::cout << "two_sided violations: " << join(ts.violated, "; ") << "\n";
                break;
            case Format::Csv:
                std::cout << "check,result\n";
                std::cout << "norm,1\n";
                std::cout << "sigma_x," << (sx ? 1 : 0) << "\n";
                std::cout << "sigma_y," << (sy ? 1 : 0) << "\n";
                std::cout << "proportionality," << (prop ? 1 : 0) << "\n";
                std::cout << "two_sided," << (ts.two_sided ? 1 : 0) << "\n";
                break;
            case Format::JsonLines:
                json j{{"norm", true},
                       {"sigma_x", sx},
                       {"sigma_y", sy},
                       {"proportionality", prop},
                       {"two_sided", ts.two_sided},
                       {"two_sided_violated", ts.violated}};
                std::cout << j.dump() << "\n";
                break;
        }
        std::vector<std::string> broken;
        if (!sx) broken.push_back("sigma_x invariance");
        if (!sy) broken.push_back("sigma_y invariance");
        if (!prop) broken.push_back("proportionality");
        if (!broken.empty())
            throw VerificationError("verify: violated: " + join(broken, ", "));
    });
}

// ----------------------------------------------------------------------- bound

void print_bound_report(const BoundReport& rep, Format fmt) {
    switch (fmt) {
        case Format::Table: {
            std::size_t vol_w = 6, qvol_w = 6;
            for (const auto& row : rep.rows) {
                vol_w = std::max(vol_w, row.volume.str().size());
                qvol_w = std::max(qvol_w, row.q_volume.str().size());
            }
            std::cout << std::setw(4) << "d" << "  " << std::setw(int(vol_w)) << "volume" << "  "
                      << std::setw(int(qvol_w)) << "q*volume" << "  satisfied\n";
            for (const auto& row : rep.rows)
                std::cout << std::setw(4) << row.d << "  " << std::setw(int(vol_w))
                          << row.volume.str() << "  " << std::setw(int(qvol_w))
                          << row.q_volume.str() << "  " << yes_no(row.satisfied) << "\n";
            std::cout << "omega: " << rep.omega_value.str() << "\n";
            std::cout << "n: " << rep.n << "\n";
            std::cout << "guaranteed_d: " << rep.guaranteed_d << "\n";
            std::cout << "entropic_d: " << rep.entropic_d << "\n";
            std::cout << "capped_at_m: " << yes_no(rep.capped_at_m) << "\n";
            std::cout << "delta_star: " << std::setprecision(12) << rep.delta_star << "\n";
            std::cout << "rate: " << std::setprecision(12) << rep.rate << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "d,volume,q_volume,satisfied\n";
            for (const auto& row : rep.rows)
                std::cout << row.d << "," << row.volume.str() << "," << row.q_volume.str() << ","
                          << (row.satisfied ? 1 : 0) << "\n";
            break;
        case Format::JsonLines: {
            for (const auto& row : rep.rows) {
                json j{{"d", row.d},
                       {"volume", row.volume.str()},
                       {"q_volume", row.q_volume.str()},
                       {"satisfied", row.satisfied}};
                std::cout << j.dump() << "\n";
            }
            json tail{{"omega", rep.omega_value.str()},
                      {"n", rep.n},
                      {"guaranteed_d", rep.guaranteed_d},
                      {"entropic_d", rep.entropic_d},
                      {"capped_at_m", rep.capped_at_m},
                      {"delta_star", rep.delta_star},
                      {"rate", rep.rate}};
            std::cout << tail.dump() << "\n";
            break;
        }
    }
}

void register_bound(CLI::App& app) {
    struct Opts {
        uint64_t q = 0, m = 0, s = 0, r = 0;
        std::size_t count = 0;
        uint64_t limit = uint64_t(1) << 31;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand(
        "bound", "existence bound: either one instance (--m --r) or a sweep (--count)");
    cmd->add_option("--q", opt->q, "field size, prime")->required();
    cmd->add_option("--s", opt->s, "block count")->required();
    cmd->add_option("--m", opt->m, "cycle length for the single-instance form");
    cmd->add_option("--r", opt->r, "twist exponent for the single-instance form");
    cmd->add_option("--count", opt->count, "sweep over this many qualifying primes m");
    cmd->add_option("--limit", opt->limit, "largest prime considered in the sweep")
        ->capture_default_str();
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("bound", {{"q", std::to_string(opt->q)},
                              {"s", std::to_string(opt->s)},
                              {"m", std::to_string(opt->m)},
                              {"r", std::to_string(opt->r)},
                              {"count", std::to_string(opt->count)},
                              {"limit", std::to_string(opt->limit)},
                              {"format", opt->format}});
        const Format fmt = parse_format(opt->format);
        if (opt->count == 0) {
            if (opt->m == 0 || opt->r == 0)
                throw ParameterError("bound: give --m and --r, or --count for a sweep");
            print_bound_report(
                guaranteed_distance(validate(opt->q, opt->m, opt->s, opt->r, Regime::Counting)),
                fmt);
            return;
        }
        const auto primes = artin_primes(int64_t(opt->q), opt->s, opt->count, opt->limit);
        if (fmt == Format::Csv) std::cout << "m,r,omega,n,guaranteed_d,entropic_d\n";
        for (const auto& row : primes.rows) {
            uint64_t r = 0;
            for (uint64_t cand = 2; cand < row.m; ++cand)
                if (mult_order(cand, row.m) == opt->s) {
                    r = cand;
                    break;
                }
            const auto rep =
                guaranteed_distance(validate(opt->q, row.m, opt->s, r, Regime::Counting));
            switch (fmt) {
                case Format::Table:
                    std::cout << "m=" << row.m << " r=" << r << " omega=" << rep.omega_value.str()
                              << " n=" << rep.n << " guaranteed_d=" << rep.guaranteed_d
                              << " entropic_d=" << rep.entropic_d << "\n";
                    break;
                case Format::Csv:
                    std::cout << row.m << "," << r << "," << rep.omega_value.str() << "," << rep.n
                              << "," << rep.guaranteed_d << "," << rep.entropic_d << "\n";
                    break;
                case Format::JsonLines: {
                    json j{{"m", row.m},
                           {"r", r},
                           {"omega", rep.omega_value.str()},
                           {"n", rep.n},
                           {"guaranteed_d", rep.guaranteed_d},
                           {"entropic_d", rep.entropic_d}};
                    std::cout << j.dump() << "\n";
                    break;
                }
            }
        }
    });
}

// ---------------------------------------------------------------------- search

void register_search(CLI::App& app) {
    struct Opts {
        ParamFlags p;
        uint64_t trials = 0;
        uint32_t target_d = 0;
        uint64_t seed = 0;
        bool seed_given = false;
        int threads = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("search", "seeded random search for a high-distance code");
    add_params(cmd, opt->p);
    cmd->add_option("--trials", opt->trials, "number of draws")->required();
    cmd->add_option("--target-d", opt->target_d, "stop criterion reported as achieved");
    cmd->add_option("--seed", opt->seed, "64-bit seed; generated and printed when absent");
    cmd->add_option("--threads", opt->threads, "worker cap, 0 = library default");
    add_format(cmd, opt->format);
    cmd->callback([opt, cmd] {
        if (!cmd->count("--seed")) {
            std::random_device rd;
            opt->seed = (uint64_t(rd()) << 32) ^ rd();
        }
        echo_config("search", {{"q", std::to_string(opt->p.q)},
                               {"m", std::to_string(opt->p.m)},
                               {"s", std::to_string(opt->p.s)},
                               {"r", std::to_string(opt->p.r)},
                               {"trials", std::to_string(opt->trials)},
                               {"target_d", std::to_string(opt->target_d)},
                               {"seed", std::to_string(opt->seed)},
                               {"threads", std::to_string(opt->threads)},
                               {"format", opt->format}});
        const auto params = resolve(opt->p);
        SearchOptions sopts;
        sopts.trials = opt->trials;
        sopts.target_d = opt->target_d;
        sopts.seed = opt->seed;
        sopts.threads = opt->threads;
        const auto rep = expurgated_search(params, sopts);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << save_descriptor(rep.best);
                std::cout << "seed: " << rep.seed << "\n";
                std::cout << "trials: " << rep.trials << "\n";
                std::cout << "target_d: " << rep.target_d << "\n";
                std::cout << "d_min: " << rep.best_distance.d_min << "\n";
                std::cout << "achieved: " << yes_no(rep.achieved) << "\n";
                std::cout << "distinct_a1: " << rep.distinct_a1_sampled << "\n";
                break;
            case Format::Csv:
                std::cout << "seed,trials,target_d,d_min,achieved,distinct_a1,a\n";
                std::cout << rep.seed << "," << rep.trials << "," << rep.target_d << ","
                          << rep.best_distance.d_min << "," << (rep.achieved ? 1 : 0) << ","
                          << rep.distinct_a1_sampled << "," << hex_of_code(rep.best) << "\n";
                break;
            case Format::JsonLines: {
                json j = descriptor_json(rep.best);
                j["seed"] = rep.seed;
                j["trials"] = rep.trials;
                j["target_d"] = rep.target_d;
                j["d_min"] = rep.best_distance.d_min;
                j["achieved"] = rep.achieved;
                j["distinct_a1"] = rep.distinct_a1_sampled;
                std::cout << j.dump() << "\n";
                break;
            }
        }
    });
}

// ----------------------------------------------------------------- cover-check

void register_cover_check(CLI::App& app) {
    struct Opts {
        ParamFlags p;
        bool no_weight_filter = false;
        uint64_t bound = uint64_t(1) << 26;
        int threads = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("cover-check",
                                   "how many codes share any single low-weight vector");
    add_params(cmd, opt->p);
    cmd->add_flag("--no-weight-filter", opt->no_weight_filter,
                  "count every nonzero codeword, not just weights below m");
    cmd->add_option("--bound", opt->bound, "cap on omega * q^m")->capture_default_str();
    cmd->add_option("--threads", opt->threads, "worker cap, 0 = library default");
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("cover-check", {{"q", std::to_string(opt->p.q)},
                                    {"m", std::to_string(opt->p.m)},
                                    {"s", std::to_string(opt->p.s)},
                                    {"r", std::to_string(opt->p.r)},
                                    {"weight_filter", yes_no(!opt->no_weight_filter)},
                                    {"bound", std::to_string(opt->bound)},
                                    {"threads", std::to_string(opt->threads)},
                                    {"format", opt->format}});
        const auto params = resolve(opt->p);
        CoverOptions copts;
        copts.weight_filter = !opt->no_weight_filter;
        copts.bound = opt->bound;
        copts.threads = opt->threads;
        const auto rep = cover_multiplicity(params, copts);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << "multiplicity  vectors\n";
                for (const auto& [mult, count] : rep.histogram)
                    std::cout << std::setw(12) << mult << "  " << count << "\n";
                std::cout << "max_multiplicity: " << rep.max_multiplicity << "\n";
                std::cout << "codes: " << rep.codes.str() << "\n";
                std::cout << "vectors: " << rep.vectors << "\n";
                std::cout << "weight_filter: " << yes_no(rep.weight_filter) << "\n";
                std::cout << "within_bound: " << yes_no(rep.within_bound) << "\n";
                break;
            case Format::Csv:
                std::cout << "multiplicity,vectors\n";
                for (const auto& [mult, count] : rep.histogram)
                    std::cout << mult << "," << count << "\n";
                break;
            case Format::JsonLines: {
                for (const auto& [mult, count] : rep.histogram) {
                    json j{{"multiplicity", mult}, {"vectors", count}};
                    std::cout << j.dump() << "\n";
                }
                json tail{{"max_multiplicity", rep.max_multiplicity},
                          {"codes", rep.codes.str()},
                          {"vectors", rep.vectors},
                          {"weight_filter", rep.weight_filter},
                          {"within_bound", rep.within_bound}};
                std::cout << tail.dump() << "\n";
                break;
            }
        }
        if (!rep.within_bound)
            throw VerificationError("cover-check: multiplicity exceeds q");
    });
}

// --------------------------------------------------------------------- density

void register_density(CLI::App& app) {
    struct Opts {
        int64_t a = 0;
        uint64_t s = 0, limit = 0;
        std::string format = "table";
    };
    auto opt = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("density",
                                   "empirical share of qualifying primes in the progression");
    cmd->add_option("--a", opt->a, "base")->required();
    cmd->add_option("--s", opt->s, "progression modulus")->required();
    cmd->add_option("--limit", opt->limit, "count primes up to here")->required();
    add_format(cmd, opt->format);
    cmd->callback([opt] {
        echo_config("density", {{"a", std::to_string(opt->a)},
                                {"s", std::to_string(opt->s)},
                                {"limit", std::to_string(opt->limit)},
                                {"format", opt->format}});
        const auto rep = empirical_density(opt->a, opt->s, opt->limit);
        switch (parse_format(opt->format)) {
            case Format::Table:
                std::cout << "qualifying: " << rep.qualifying << "\n";
                std::cout << "progression: " << rep.progression << "\n";
                std::cout << "ratio: " << std::setprecision(10) << rep.ratio << "\n";
                break;
            case Format::Csv:
                std::cout << "qualifying,progression,ratio\n";
                std::cout << rep.qualifying << "," << rep.progression << ","
                          << std::setprecision(10) << rep.ratio << "\n";
                break;
            case Format::JsonLines:
                json j{{"qualifying", rep.qualifying},
                       {"progression", rep.progression},
                       {"ratio", rep.ratio}};
                std::cout << j.dump() << "\n";
                break;
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metacyclic group code construction, enumeration, and search"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    register_artin_primes(app);
    register_admissible(app);
    register_params_check(app);
    register_omega(app);
    register_enumerate(app);
    register_distance(app);
    register_verify(app);
    register_bound(app);
    register_search(app);
    register_cover_check(app);
    register_density(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
