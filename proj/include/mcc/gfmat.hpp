#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mcc {

// Dense row-major matrix over the prime field F_q.
struct GfMatrix {
    uint32_t q = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    GfMatrix() = default;
    GfMatrix(uint32_t q, std::size_t rows, std::size_t cols)
        : q(q), rows(rows), cols(cols), a(rows * cols, 0) {}

    uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    std::span<uint32_t> row(std::size_t r) { return {a.data() + r * cols, cols}; }
    std::span<const uint32_t> row(std::size_t r) const { return {a.data() + r * cols, cols}; }

    static GfMatrix identity(uint32_t q, std::size_t n);

    bool operator==(const GfMatrix&) const = default;
};

uint32_t gf_inverse(uint32_t x, uint32_t q);

// Gauss-Jordan elimination in place; returns the rank. Zero rows sink to the bottom.
std::size_t gf_rref_inplace(GfMatrix& mat);

GfMatrix gf_rref(GfMatrix mat);
std::size_t gf_rank(GfMatrix mat);

// Membership of v in the row space of a matrix already in reduced row echelon form.
bool in_row_space(const GfMatrix& rref, std::span<const uint32_t> v);

}  // namespace mcc
