#include "brk/polymat.hpp"

#include <stdexcept>

namespace brkit {

PolyMatrix PolyMatrix::identity(int n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(nvars, Rat(1));
    return m;
}

PolyMatrix PolyMatrix::from_constants(const QMat& src, int nvars) {
    int r = static_cast<int>(src.size());
    int c = r ? static_cast<int>(src[0].size()) : 0;
    PolyMatrix m(r, c, nvars);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = MultiPoly::constant(nvars, src[i][j]);
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_space_of_linear_forms() const {
    for (const auto& row : entries_)
        for (const auto& e : row)
            if (!e.is_linear_form()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("polymat add: shape mismatch");
    PolyMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entries_[i][j] += o.entries_[i][j];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("polymat sub: shape mismatch");
    PolyMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entries_[i][j] -= o.entries_[i][j];
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("polymat mul: shape mismatch");
    PolyMatrix out(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            if (entries_[i][t].is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.entries_[t][j].is_zero()) continue;
                out.entries_[i][j] += entries_[i][t] * o.entries_[t][j];
            }
        }
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entries_[j][i] = entries_[i][j];
    return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_ix,
                                 const std::vector<int>& col_ix) const {
    PolyMatrix out(static_cast<int>(row_ix.size()),
                   static_cast<int>(col_ix.size()), nvars_);
    for (size_t i = 0; i < row_ix.size(); ++i)
        for (size_t j = 0; j < col_ix.size(); ++j)
            out.entries_[i][j] = entries_[row_ix[i]][col_ix[j]];
    return out;
}

PolyMatrix PolyMatrix::block(int r0, int r1, int c0, int c1) const {
    PolyMatrix out(r1 - r0, c1 - c0, nvars_);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) out.entries_[i - r0][j - c0] = entries_[i][j];
    return out;
}

PolyMatrix PolyMatrix::left_mul(const QMat& p) const {
    int n = static_cast<int>(p.size());
    PolyMatrix out(n, cols_, nvars_);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < rows_; ++t) {
            if (brkit::is_zero(p[i][t])) continue;
            for (int j = 0; j < cols_; ++j)
                out.entries_[i][j] += entries_[t][j] * p[i][t];
        }
    return out;
}

PolyMatrix PolyMatrix::right_mul(const QMat& q) const {
    int m = static_cast<int>(q[0].size());
    PolyMatrix out(rows_, m, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            if (entries_[i][t].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (brkit::is_zero(q[t][j])) continue;
                out.entries_[i][j] += entries_[i][t] * q[t][j];
            }
        }
    return out;
}

QMat PolyMatrix::eval(const std::vector<Rat>& point) const {
    QMat out = qmat_zero(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = entries_[i][j].eval(point);
    return out;
}

QMat PolyMatrix::var_slice(int v) const {
    QMat out = qmat_zero(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = entries_[i][j].coeff_of_var(v);
    return out;
}

std::vector<QMat> PolyMatrix::slices() const {
    std::vector<QMat> out;
    out.reserve(nvars_);
    for (int v = 0; v < nvars_; ++v) out.push_back(var_slice(v));
    return out;
}

PolyMatrix PolyMatrix::from_slices(const std::vector<QMat>& slices) {
    int n = static_cast<int>(slices.size());
    int r = static_cast<int>(slices[0].size());
    int c = static_cast<int>(slices[0][0].size());
    PolyMatrix out(r, c, n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                out.at(i, j) += MultiPoly::variable(v, n, slices[v][i][j]);
    return out;
}

namespace {

size_t support_size(const MultiPoly& p) { return p.terms().size(); }

// One Bareiss elimination pass over a working copy. Returns the number of
// successful pivot steps (the rank). When detp is non-null the matrix must
// be square; *detp receives the determinant (with row/column swap signs).
int bareiss(std::vector<std::vector<MultiPoly>> a, int nvars, MultiPoly* detp) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    MultiPoly prev = MultiPoly::constant(nvars, Rat(1));
    int sign = 1;
    int s = 0;
    for (; s < std::min(rows, cols); ++s) {
        int pi = -1, pj = -1;
        size_t best = 0;
        for (int i = s; i < rows; ++i)
            for (int j = s; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                size_t sz = support_size(a[i][j]);
                if (pi < 0 || sz < best) {
                    pi = i;
                    pj = j;
                    best = sz;
                }
            }
        if (pi < 0) break;
        if (pi != s) { std::swap(a[pi], a[s]); sign = -sign; }
        if (pj != s) {
            for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][s]);
            sign = -sign;
        }
        for (int i = s + 1; i < rows; ++i) {
            for (int j = s + 1; j < cols; ++j)
                a[i][j] = divexact(a[s][s] * a[i][j] - a[i][s] * a[s][j], prev);
            a[i][s] = MultiPoly::zero(nvars);
        }
        prev = a[s][s];
    }
    if (detp) {
        if (rows != cols) throw std::invalid_argument("bareiss det: non-square");
        if (s < rows)
            *detp = MultiPoly::zero(nvars);
        else
            *detp = sign < 0 ? -prev : prev;
    }
    return s;
}

}  // namespace

int exact_rank(const PolyMatrix& m) {
    std::vector<std::vector<MultiPoly>> a(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        a[i].reserve(m.cols());
        for (int j = 0; j < m.cols(); ++j) a[i].push_back(m.at(i, j));
    }
    return bareiss(std::move(a), m.nvars(), nullptr);
}

MultiPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: non-square");
    std::vector<std::vector<MultiPoly>> a(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i].push_back(m.at(i, j));
    MultiPoly det;
    bareiss(std::move(a), m.nvars(), &det);
    return det;
}

bool all_minors_vanish(const PolyMatrix& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("all_minors_vanish: size out of range");
    std::vector<int> rsel(k), csel(k);
    for (int i = 0; i < k; ++i) rsel[i] = i;
    auto advance = [&](std::vector<int>& sel, int limit) {
        int i = k - 1;
        while (i >= 0 && sel[i] == limit - k + i) --i;
        if (i < 0) return false;
        ++sel[i];
        for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        return true;
    };
    do {
        for (int i = 0; i < k; ++i) csel[i] = i;
        do {
            if (!poly_det(m.submatrix(rsel, csel)).is_zero()) return false;
        } while (advance(csel, m.cols()));
    } while (advance(rsel, m.rows()));
    return true;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: non-square");
    int n = m.rows();
    PolyMatrix adj(n, n, m.nvars());
    if (n == 1) {
        adj.at(0, 0) = MultiPoly::constant(m.nvars(), Rat(1));
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rsel, csel;
            for (int t = 0; t < n; ++t) {
                if (t != i) rsel.push_back(t);
                if (t != j) csel.push_back(t);
            }
            MultiPoly minor = poly_det(m.submatrix(rsel, csel));
            adj.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return adj;
}

int rank_at(const PolyMatrix& m, const std::vector<Rat>& point) {
    return qmat_rank(m.eval(point));
}

}  // namespace brkit
