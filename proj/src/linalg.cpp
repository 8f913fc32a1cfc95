#include "polyatlas/linalg.hpp"

#include <stdexcept>

namespace polyatlas {

RankSolveResult rank_and_solve(const Matrix& a, const std::optional<std::vector<Rational>>& rhs) {
    const size_t m = a.size();
    const size_t n = m ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("rank_and_solve: ragged matrix");
    if (rhs && rhs->size() != m) throw std::invalid_argument("rank_and_solve: rhs length");

    const size_t width = n + (rhs ? 1 : 0);
    std::vector<std::vector<Integer>> w(m, std::vector<Integer>(width));
    for (size_t i = 0; i < m; ++i) {
        Integer l = 1;
        auto lcm_with = [&](const Rational& x) {
            Integer den = denominator(x);
            l = l / gcd(l, den) * den;
        };
        for (const auto& x : a[i]) lcm_with(x);
        if (rhs) lcm_with((*rhs)[i]);
        for (size_t j = 0; j < n; ++j) w[i][j] = numerator(Rational(a[i][j] * l));
        if (rhs) w[i][n] = numerator(Rational((*rhs)[i] * l));
    }

    std::vector<size_t> pivots;
    Integer prev = 1;
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        size_t p = r;
        while (p < m && w[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(w[p], w[r]);
        for (size_t i = r + 1; i < m; ++i) {
            for (size_t j = col + 1; j < width; ++j)
                w[i][j] = (w[r][col] * w[i][j] - w[i][col] * w[r][j]) / prev;
            w[i][col] = 0;
        }
        prev = w[r][col];
        pivots.push_back(col);
        ++r;
    }

    RankSolveResult res;
    res.rank = static_cast<int>(r);
    if (!rhs) return res;
    for (size_t i = r; i < m; ++i)
        if (w[i][n] != 0) {
            res.consistent = false;
            return res;
        }
    std::vector<Rational> x(n, Rational(0));
    for (size_t k = r; k-- > 0;) {
        Rational s = Rational(w[k][n]);
        for (size_t j = pivots[k] + 1; j < n; ++j)
            if (w[k][j] != 0) s -= Rational(w[k][j]) * x[j];
        x[pivots[k]] = s / Rational(w[k][pivots[k]]);
    }
    res.solution = std::move(x);
    return res;
}

int rank(const Matrix& a) { return rank_and_solve(a).rank; }

std::vector<std::vector<Rational>> nullspace(const Matrix& a, int cols) {
    Matrix m = a;
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_dim(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("affine_dim: empty point list");
    Matrix diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != points[0].size())
            throw std::invalid_argument("affine_dim: mixed ambient dimensions");
        diffs.push_back(sub(points[i], points[0]));
    }
    return diffs.empty() ? 0 : rank(diffs);
}

}  // namespace polyatlas
