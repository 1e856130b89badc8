#include "tca/linalg.hpp"

#include <utility>

namespace tca {

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                if (m[row][j] != 0) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix nullspace(Matrix m, std::size_t cols) {
    const auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const Matrix& a, const std::vector<Rational>& b, std::size_t cols) {
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(cols, Rational(0));
        aug[i].push_back(b[i]);
    }
    const auto pivots = row_reduce(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return {LinearSolution::Kind::inconsistent, {}};
    if (pivots.size() < cols) return {LinearSolution::Kind::underdetermined, {}};
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return {LinearSolution::Kind::unique, std::move(x)};
}

}  // namespace tca
