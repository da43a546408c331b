#include "mcc/gfmat.hpp"

#include "mcc/errors.hpp"
#include "mcc/numtheory.hpp"

namespace mcc {

GfMatrix GfMatrix::identity(uint32_t q, std::size_t n) {
    GfMatrix id(q, n, n);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
    return id;
}

uint32_t gf_inverse(uint32_t x, uint32_t q) {
    if (x % q == 0) throw ParameterError("gf_inverse: zero has no inverse");
    return uint32_t(pow_mod(x % q, q - 2, q));
}

std::size_t gf_rref_inplace(GfMatrix& mat) {
    const uint32_t q = mat.q;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < mat.cols && pivot_row < mat.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < mat.rows && mat.at(sel, col) == 0) ++sel;
        if (sel == mat.rows) continue;
        if (sel != pivot_row) {
            for (std::size_t c = 0; c < mat.cols; ++c)
                std::swap(mat.at(sel, c), mat.at(pivot_row, c));
        }
        const uint32_t inv = gf_inverse(mat.at(pivot_row, col), q);
        for (std::size_t c = col; c < mat.cols; ++c)
            mat.at(pivot_row, c) = uint32_t(uint64_t(mat.at(pivot_row, c)) * inv % q);
        for (std::size_t r = 0; r < mat.rows; ++r) {
            if (r == pivot_row) continue;
            const uint32_t f = mat.at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < mat.cols; ++c) {
                uint64_t v = mat.at(r, c) + uint64_t(q - f) * mat.at(pivot_row, c) % q;
                mat.at(r, c) = uint32_t(v % q);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

GfMatrix gf_rref(GfMatrix mat) {
    gf_rref_inplace(mat);
    return mat;
}

std::size_t gf_rank(GfMatrix mat) { return gf_rref_inplace(mat); }

bool in_row_space(const GfMatrix& rref, std::span<const uint32_t> v) {
    if (v.size() != rref.cols) throw ParameterError("in_row_space: length mismatch");
    const uint32_t q = rref.q;
    std::vector<uint32_t> w(v.begin(), v.end());
    for (std::size_t r = 0; r < rref.rows; ++r) {
        std::size_t col = 0;
        while (col < rref.cols && rref.at(r, col) == 0) ++col;
        if (col == rref.cols) break;  // zero rows are at the bottom
        const uint32_t f = w[col];
        if (f == 0) continue;
        for (std::size_t c = col; c < rref.cols; ++c)
            w[c] = uint32_t((w[c] + uint64_t(q - f) * rref.at(r, c)) % q);
    }
    for (uint32_t x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace mcc
