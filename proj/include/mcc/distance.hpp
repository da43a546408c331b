#pragma once

#include <cstdint>
#include <vector>

#include "mcc/code.hpp"
#include "mcc/gfmat.hpp"

namespace mcc {

struct DistanceOptions {
    uint64_t guard = uint64_t(1) << 26;  // largest q^m scanned unless overridden
    bool override_guard = false;
    int threads = 0;  // 0 = library default
};

struct RowsDistanceResult {
    uint32_t d_min = 0;
    std::vector<uint32_t> witness;
    uint64_t enumerated = 0;
};

// Exhaustive minimum weight of the row space of a rank-`rows` generator.
// Walks information words in q-ary Gray order so each step is one row update;
// chunks the walk across OpenMP threads with a deterministic reduction.
RowsDistanceResult min_distance_rows(const GfMatrix& gen, const DistanceOptions& opts = {});

struct DistanceResult {
    uint32_t d_min = 0;
    Codeword witness;
    uint64_t enumerated = 0;
};

DistanceResult min_distance(const MetacyclicCode& code, const DistanceOptions& opts = {});

// Reference implementation: positional order, every codeword rebuilt from
// scratch through ring multiplications. Slow and independent, kept for tests.
DistanceResult min_distance_serial(const MetacyclicCode& code,
                                   uint64_t guard = uint64_t(1) << 26);

}  // namespace mcc
