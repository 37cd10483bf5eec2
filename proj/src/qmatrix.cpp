#include "brk/qmatrix.hpp"

#include <stdexcept>

namespace brkit {

QMat qmat_zero(int rows, int cols) {
    return QMat(rows, QVec(cols, Rat(0)));
}

QMat qmat_identity(int n) {
    QMat m = qmat_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int p = k ? static_cast<int>(b[0].size()) : 0;
    QMat out = qmat_zero(n, p);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (is_zero(a[i][t])) continue;
            for (int j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

QMat qmat_transpose(const QMat& a) {
    int n = static_cast<int>(a.size());
    int m = n ? static_cast<int>(a[0].size()) : 0;
    QMat out = qmat_zero(m, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out[j][i] = a[i][j];
    return out;
}

bool qmat_is_zero(const QMat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!is_zero(v)) return false;
    return true;
}

std::vector<int> qmat_rref(QMat& a) {
    std::vector<int> pivots;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(a[i][c])) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(a[sel], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int qmat_rank(QMat a) {
    return static_cast<int>(qmat_rref(a).size());
}

std::vector<QVec> qmat_nullspace(const QMat& a, int cols) {
    QMat m = a;
    if (m.empty()) m.push_back(QVec(cols, Rat(0)));
    std::vector<int> pivots = qmat_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

QMat qmat_inverse(const QMat& a) {
    int n = static_cast<int>(a.size());
    QMat aug = qmat_zero(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = qmat_rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw std::invalid_argument("qmat_inverse: singular matrix");
    QMat inv = qmat_zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

int span_dim(const std::vector<QVec>& vecs) {
    if (vecs.empty()) return 0;
    return qmat_rank(vecs);
}

}  // namespace brkit
