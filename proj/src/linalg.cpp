#include "rwgraph/linalg.hpp"

#include <cassert>

namespace rwg {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);  // drop zero rows
    return pivots;
}

LinearSolution solve_linear(Mat a, const Vec& b) {
    LinearSolution sol;
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    assert(b.size() == rows);
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    for (int p : pivots)
        if (static_cast<size_t>(p) == cols) return sol;  // row (0 ... 0 | 1)
    sol.consistent = true;
    sol.particular.assign(cols, 0);
    std::vector<char> is_pivot(cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        is_pivot[pivots[i]] = 1;
        sol.particular[pivots[i]] = a[i][cols];
    }
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec k(cols, 0);
        k[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -a[i][c];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

int rank(Mat m) {
    return static_cast<int>(rref(m).size());
}

}  // namespace rwg
