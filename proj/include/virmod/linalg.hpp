#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "virmod/scalar.hpp"

namespace virmod {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row major

// Incremental row-echelon span over exact scalars. insert() reduces the vector
// against the current rows and keeps it when independent.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    // true when v enlarged the span
    bool insert(Vec v);
    bool contains(Vec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_;
    std::vector<std::pair<std::size_t, Vec>> rows_;  // (pivot column, row), pivots increasing

    void reduce(Vec& v) const;
};

std::size_t rank(Mat m);

// Exact solution of m * x = rhs (m square or rectangular); nullopt when inconsistent.
// Free variables, if any, are set to zero.
std::optional<Vec> solve(Mat m, Vec rhs);

}  // namespace virmod
