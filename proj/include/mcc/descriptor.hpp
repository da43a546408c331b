#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mcc/code.hpp"

namespace mcc {

// Wire format: {"q":..,"m":..,"s":..,"r":..,"a":[[..m ints..], ...]}.
// Coefficients ascending. The generator matrix is never serialized.
nlohmann::json descriptor_json(const MetacyclicCode& code);
std::string save_descriptor(const MetacyclicCode& code);

// Full validation: parameter regime (counting when satisfied, construction
// otherwise), coefficient ranges, norm condition, chain consistency.
MetacyclicCode load_descriptor(const nlohmann::json& j);
MetacyclicCode load_descriptor_text(const std::string& text);
MetacyclicCode load_descriptor_file(const std::string& path);

}  // namespace mcc
