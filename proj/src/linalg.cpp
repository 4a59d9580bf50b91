#include "kleinpencil/linalg.hpp"

#include <algorithm>

namespace kleinpencil {

size_t rref_in_place(Matrix& m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        CycNum inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            CycNum f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

size_t rank(Matrix m) { return rref_in_place(m); }

std::vector<Vec> kernel_basis(const Matrix& m, const FieldCtxPtr& ctx) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    Matrix r = m;
    rref_in_place(r);
    // locate pivot columns
    std::vector<long> pivot_of_col(cols, -1);
    size_t row = 0;
    for (size_t c = 0; c < cols && row < r.size(); ++c) {
        if (!r[row][c].is_zero()) {
            pivot_of_col[c] = static_cast<long>(row);
            ++row;
        }
    }
    std::vector<Vec> out;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(cols, CycNum::zero(ctx));
        v[c] = CycNum::one(ctx);
        for (size_t c2 = 0; c2 < cols; ++c2) {
            long pr = pivot_of_col[c2];
            if (pr >= 0) v[c2] = -r[static_cast<size_t>(pr)][c];
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(Matrix a, Vec b, const FieldCtxPtr& ctx) {
    const size_t rows = a.size();
    if (rows == 0) return Vec{};
    const size_t cols = a[0].size();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    rref_in_place(a);
    Vec x(cols, CycNum::zero(ctx));
    for (size_t i = 0; i < rows; ++i) {
        size_t lead = cols + 1;
        for (size_t j = 0; j <= cols; ++j)
            if (!a[i][j].is_zero()) { lead = j; break; }
        if (lead == cols) return std::nullopt;  // 0 = nonzero
        if (lead > cols) continue;              // zero row
        x[lead] = a[i][cols];
    }
    return x;
}

Matrix span_rref(std::vector<Vec> vectors) {
    Matrix m = std::move(vectors);
    size_t r = rref_in_place(m);
    m.resize(r);
    return m;
}

bool in_span(const Matrix& basis, const Vec& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Matrix m = basis;
    size_t r0 = rref_in_place(m);
    m.push_back(v);
    return rref_in_place(m) == r0;
}

CycNum det(Matrix m, const FieldCtxPtr& ctx) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    CycNum acc = CycNum::one(ctx);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return CycNum::zero(ctx);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            acc = -acc;
        }
        acc = acc * m[col][col];
        CycNum inv = m[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            CycNum factor = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return acc;
}

}  // namespace kleinpencil
