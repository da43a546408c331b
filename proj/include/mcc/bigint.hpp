#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, uint64_t exp) {
    BigInt acc = 1, b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return acc;
}

// log2 of a positive integer, good to ~1e-12 relative error.
double big_log2(const BigInt& v);

}  // namespace mcc
