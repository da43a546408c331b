#include "mcc/descriptor.hpp"

#include <fstream>

#include "mcc/errors.hpp"

namespace mcc {

nlohmann::json descriptor_json(const MetacyclicCode& code) {
    nlohmann::json j;
    j["q"] = code.params.q;
    j["m"] = code.params.m;
    j["s"] = code.params.s;
    j["r"] = code.params.r;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& aj : code.a) {
        nlohmann::json row = nlohmann::json::array();
        for (uint32_t c : aj.c) row.push_back(c);
        rows.push_back(std::move(row));
    }
    j["a"] = std::move(rows);
    return j;
}

std::string save_descriptor(const MetacyclicCode& code) {
    return descriptor_json(code).dump(2) + "\n";
}

MetacyclicCode load_descriptor(const nlohmann::json& j) {
    for (const char* key : {"q", "m", "s", "r", "a"})
        if (!j.contains(key))
            throw ParameterError(std::string("descriptor: missing field ") + key);
    uint64_t q, m, s, r;
    try {
        q = j.at("q").get<uint64_t>();
        m = j.at("m").get<uint64_t>();
        s = j.at("s").get<uint64_t>();
        r = j.at("r").get<uint64_t>();
    } catch (const nlohmann::json::exception&) {
        throw ParameterError("descriptor: q, m, s, r must be non-negative integers");
    }

    // Prefer the counting regime when the parameters earn it.
    GroupParams params;
    if (check_params(q, m, s, r, Regime::Counting).ok)
        params = validate(q, m, s, r, Regime::Counting);
    else
        params = validate(q, m, s, r, Regime::Construction);

    const auto& a = j.at("a");
    if (!a.is_array() || a.size() != s - 1)
        throw ParameterError("descriptor: a must hold exactly s - 1 coefficient rows");
    std::vector<RingElement> given;
    for (const auto& row : a) {
        if (!row.is_array() || row.size() != m)
            throw ParameterError("descriptor: each a row must hold exactly m coefficients");
        RingElement f = RingElement::zero(uint32_t(q), uint32_t(m));
        for (uint32_t i = 0; i < m; ++i) {
            uint64_t v;
            try {
                v = row.at(i).get<uint64_t>();
            } catch (const nlohmann::json::exception&) {
                throw ParameterError("descriptor: coefficients must be integers");
            }
            if (v >= q) throw ParameterError("descriptor: coefficient out of range [0, q)");
            f.c[i] = uint32_t(v);
        }
        given.push_back(std::move(f));
    }

    if (!norm_check(params, given[0]))
        throw VerificationError("descriptor: norm condition violated");
    const auto expected = chain(params, given[0]);
    for (std::size_t k = 1; k < given.size(); ++k)
        if (!(given[k] == expected[k]))
            throw VerificationError("descriptor: a_" + std::to_string(k + 1) +
                                    " differs from the chain of a_1");
    return build_code(params, given[0]);
}

MetacyclicCode load_descriptor_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("descriptor: parse error: ") + e.what());
    }
    return load_descriptor(j);
}

MetacyclicCode load_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("descriptor: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_descriptor_text(text);
}

}  // namespace mcc
