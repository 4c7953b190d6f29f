#pragma once

#include "sheafres/scalar.hpp"

#include <optional>
#include <vector>

namespace sheafres {

using QMatrix = std::vector<std::vector<Scalar>>;
using QVector = std::vector<Scalar>;

// Row-reduce in place; returns pivot column indices.
std::vector<int> rref(QMatrix& m);
std::size_t matrix_rank(QMatrix m);
// One solution of M x = b, if any.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
// Basis of the null space of M.
std::vector<QVector> nullspace(const QMatrix& m);

} // namespace sheafres
