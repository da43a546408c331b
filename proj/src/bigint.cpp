#include "mcc/bigint.hpp"

#include <cmath>

#include "mcc/errors.hpp"

namespace mcc {

double big_log2(const BigInt& v) {
    if (v <= 0) throw ParameterError("big_log2: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 53) return std::log2(v.convert_to<double>());
    const unsigned shift = bits - 53;
    const double top = (v >> shift).convert_to<double>();
    return double(shift) + std::log2(top);
}

}  // namespace mcc
