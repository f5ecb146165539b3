#include "semigraphoid/linalg.hpp"

#include <stdexcept>

namespace sg {

namespace {

// reduced row echelon form; returns pivot column per pivot row
std::vector<int> rref(rat_mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int k = 0; k < m.cols; ++k) swap(m.at(p, k), m.at(r, k));
        rat inv = m.at(r, c);
        for (int k = c; k < m.cols; ++k) m.at(r, k) /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            rat f = m.at(i, c);
            for (int k = c; k < m.cols; ++k) m.at(i, k) -= f * m.at(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const rat_mat& m) {
    rat_mat tmp = m;
    return static_cast<int>(rref(tmp).size());
}

std::vector<rat_vec> kernel_basis(const rat_mat& m) {
    rat_mat tmp = m;
    std::vector<int> pivots = rref(tmp);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<rat_vec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        rat_vec v(m.cols, rat(0));
        v[c] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -tmp.at(static_cast<int>(pr), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<rat_vec> solve_square(const rat_mat& m, const rat_vec& rhs) {
    if (m.rows != m.cols || static_cast<int>(rhs.size()) != m.rows)
        throw std::invalid_argument("solve_square needs a square system");
    rat_mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = rhs[r];
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != m.cols || (pivots.size() && pivots.back() == m.cols))
        return std::nullopt;
    rat_vec x(m.cols);
    for (int r = 0; r < m.cols; ++r) x[pivots[r] /* == r */] = aug.at(r, m.cols);
    return x;
}

}  // namespace sg
