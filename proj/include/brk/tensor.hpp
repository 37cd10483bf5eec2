#ifndef BRK_TENSOR_HPP
#define BRK_TENSOR_HPP

#include <array>
#include <map>

#include "brk/polymat.hpp"

namespace brkit {

enum class Factor { A, B, C };

Factor parse_factor(const std::string& s);
std::string factor_name(Factor f);

// Sparse order-3 tensor over the rationals; indices 0-based internally.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int a, int b, int c) : dims_{a, b, c} {}

    int dim(int axis) const { return dims_[axis]; }
    int dim(Factor f) const { return dims_[static_cast<int>(f)]; }
    const std::array<int, 3>& dims() const { return dims_; }

    bool is_zero() const { return entries_.empty(); }
    size_t term_count() const { return entries_.size(); }

    Rat at(int i, int j, int k) const;
    void add(int i, int j, int k, const Rat& v);  // accumulates, drops zeros
    void set(int i, int j, int k, const Rat& v);

    const std::map<std::array<int, 3>, Rat>& entries() const { return entries_; }

    bool operator==(const Tensor3& o) const {
        return dims_ == o.dims_ && entries_ == o.entries_;
    }

private:
    void check(int i, int j, int k) const;
    std::array<int, 3> dims_{0, 0, 0};
    std::map<std::array<int, 3>, Rat> entries_;
};

// The space of matrices T(X*) for the chosen factor, as a matrix of linear
// forms: factor A gives a b x c matrix in a variables with entry (j,k) =
// sum_i T[i,j,k] a_i; factor B gives a x c in b variables; factor C gives
// a x b in c variables.
SpaceOfMatrices slice_space(const Tensor3& t, Factor f);

// Inverse of slice_space at factor A: T[i,j,k] = coeff of a_i in entry (j,k).
Tensor3 space_to_tensor(const SpaceOfMatrices& e);

// Constant slice matrices of the chosen factor, in index order.
std::vector<QMat> tensor_slices(const Tensor3& t, Factor f);
Tensor3 tensor_from_slices(const std::vector<QMat>& slices, Factor f);

// Per-factor conciseness: flattening X* -> (other two) has full rank.
std::array<bool, 3> is_concise(const Tensor3& t);

// Kronecker (box) product: dims multiply; ((i,i'),(j,j'),(k,k')) entry is
// the product, with row-major index pairing (i,i') -> i * a2 + i'.
Tensor3 kronecker(const Tensor3& t1, const Tensor3& t2);

// T transformed by the triple action: T'[p,q,r] =
// sum gA[p][i] gB[q][j] gC[r][k] T[i,j,k]. Matrices must be invertible.
Tensor3 base_change(const Tensor3& t, const QMat& ga, const QMat& gb, const QMat& gc);

}  // namespace brkit

#endif
