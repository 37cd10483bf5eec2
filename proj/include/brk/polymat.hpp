#ifndef BRK_POLYMAT_HPP
#define BRK_POLYMAT_HPP

#include <vector>

#include "brk/poly.hpp"
#include "brk/qmatrix.hpp"
#include "brk/rng.hpp"

namespace brkit {

// Rectangular matrix of polynomials sharing one variable set.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          entries_(rows, std::vector<MultiPoly>(cols, MultiPoly::zero(nvars))) {}

    static PolyMatrix identity(int n, int nvars);
    static PolyMatrix from_constants(const QMat& m, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    MultiPoly& at(int i, int j) { return entries_[i][j]; }
    const MultiPoly& at(int i, int j) const { return entries_[i][j]; }

    bool is_zero() const;
    // Every entry is a homogeneous linear form (or zero).
    bool is_space_of_linear_forms() const;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<int>& row_ix,
                         const std::vector<int>& col_ix) const;
    // Block [r0, r1) x [c0, c1).
    PolyMatrix block(int r0, int r1, int c0, int c1) const;

    // Constant matrices acting on the left/right.
    PolyMatrix left_mul(const QMat& p) const;
    PolyMatrix right_mul(const QMat& q) const;

    QMat eval(const std::vector<Rat>& point) const;

    // Coefficient slice of variable v (valid for linear entries).
    QMat var_slice(int v) const;
    // All nvars coefficient slices in order.
    std::vector<QMat> slices() const;
    static PolyMatrix from_slices(const std::vector<QMat>& slices);

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<std::vector<MultiPoly>> entries_;
};

// A space of b x c matrices presented as a matrix of linear forms in
// a_1..a_nvars; the nvars coefficient slices span the space.
using SpaceOfMatrices = PolyMatrix;

// Rank over the fraction field of the polynomial ring: fraction-free
// Bareiss elimination with full pivoting, smallest-support pivot first.
int exact_rank(const PolyMatrix& m);

// True iff every k x k minor is the identically-zero polynomial.
bool all_minors_vanish(const PolyMatrix& m, int k);

// Determinant of a square matrix (fraction-free, exact).
MultiPoly poly_det(const PolyMatrix& m);

// Matrix of signed cofactors, transposed: m * adjugate(m) = det(m) * Id.
PolyMatrix adjugate(const PolyMatrix& m);

// Rank of the constant matrix m(point); a lower bound for exact_rank.
int rank_at(const PolyMatrix& m, const std::vector<Rat>& point);

}  // namespace brkit

#endif
