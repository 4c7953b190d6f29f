#include "sheafres/linalg.hpp"

namespace sheafres {

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Scalar inv = m[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

std::size_t matrix_rank(QMatrix m) { return rref(m).size(); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    if (m.empty()) {
        for (const auto& x : b)
            if (!x.is_zero()) return std::nullopt;
        return QVector{};
    }
    std::size_t rows = m.size(), cols = m[0].size();
    QMatrix aug = m;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<int> piv = rref(aug);
    for (std::size_t i = 0; i < rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (!aug[i][j].is_zero()) { zero = false; break; }
        if (zero && !aug[i][cols].is_zero()) return std::nullopt;
    }
    QVector x(cols, Scalar(0));
    for (std::size_t k = 0; k < piv.size(); ++k)
        if (piv[k] < (int)cols) x[piv[k]] = aug[k][cols];
    return x;
}

std::vector<QVector> nullspace(const QMatrix& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    QMatrix red = m;
    std::vector<int> piv = rref(red);
    std::vector<bool> is_pivot(cols, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < piv.size(); ++k)
            v[piv[k]] = -red[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace sheafres
