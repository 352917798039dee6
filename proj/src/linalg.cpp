#include "virmod/linalg.hpp"

#include <stdexcept>

namespace virmod {

void SpanBasis::reduce(Vec& v) const {
    for (const auto& [p, row] : rows_) {
        if (!v[p].is_zero()) {
            Scalar c = v[p];
            for (std::size_t j = p; j < dim_; ++j) v[j] -= c * row[j];
        }
    }
}

bool SpanBasis::insert(Vec v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    Scalar inv = v[p].inverse();
    for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
    auto it = rows_.begin();
    while (it != rows_.end() && it->first < p) ++it;
    rows_.insert(it, {p, std::move(v)});
    return true;
}

bool SpanBasis::contains(Vec v) const {
    if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t rank(Mat m) {
    if (m.empty()) return 0;
    SpanBasis span(m.front().size());
    std::size_t r = 0;
    for (auto& row : m)
        if (span.insert(std::move(row))) ++r;
    return r;
}

std::optional<Vec> solve(Mat m, Vec rhs) {
    const std::size_t nrows = m.size();
    if (rhs.size() != nrows) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t ncols = nrows == 0 ? 0 : m.front().size();

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && m[sel][col].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[row]);
        std::swap(rhs[sel], rhs[row]);
        Scalar inv = m[row][col].inverse();
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar c = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= c * m[row][j];
            rhs[i] -= c * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < nrows; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;

    Vec x(ncols, Scalar(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace virmod
