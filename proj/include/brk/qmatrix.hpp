#ifndef BRK_QMATRIX_HPP
#define BRK_QMATRIX_HPP

#include <vector>

#include "brk/rational.hpp"

namespace brkit {

// Dense matrix over the rationals. Plain row-major vector-of-rows; all
// elimination is exact Gaussian elimination over mpq.
using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

QMat qmat_zero(int rows, int cols);
QMat qmat_identity(int n);
QMat qmat_mul(const QMat& a, const QMat& b);
QMat qmat_transpose(const QMat& a);
bool qmat_is_zero(const QMat& a);

int qmat_rank(QMat a);

// Reduced row echelon form in place; returns the pivot column of each
// pivot row, in order.
std::vector<int> qmat_rref(QMat& a);

// Basis of the right nullspace {v : a v = 0}, one vector per basis element,
// in reduced echelon ordering (deterministic).
std::vector<QVec> qmat_nullspace(const QMat& a, int cols);

// Exact inverse; throws std::invalid_argument when singular.
QMat qmat_inverse(const QMat& a);

// Rank of the span of a list of vectors.
int span_dim(const std::vector<QVec>& vecs);

}  // namespace brkit

#endif
