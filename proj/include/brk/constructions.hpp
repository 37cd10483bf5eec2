#ifndef BRK_CONSTRUCTIONS_HPP
#define BRK_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "brk/tensor.hpp"

namespace brkit {

// A list of pairwise commuting k x k matrices of polynomials, one per slice
// of the space being blown up.  Commutation is what makes the blowup respect
// bounded rank, so construction checks it symbolically.
class CommutingFamily {
public:
    CommutingFamily(std::vector<PolyMatrix> mats);  // throws unless commuting

    int size() const { return static_cast<int>(mats_.size()); }
    int k() const { return mats_.empty() ? 0 : mats_[0].rows(); }
    int nvars() const { return mats_.empty() ? 0 : mats_[0].nvars(); }
    const PolyMatrix& operator[](int i) const { return mats_[i]; }
    const std::vector<PolyMatrix>& mats() const { return mats_; }

private:
    std::vector<PolyMatrix> mats_;
};

// Wraps constant matrices c_i as a_i * c_i over fresh variables a_1..a_n.
// The constants must commute pairwise.
CommutingFamily family_from_constants(const std::vector<QMat>& cs);

// A random commuting family of nslices matrices: polynomials of degree <= 2
// in one random integer matrix z, wrapped as a_i * g_i(z).
CommutingFamily random_commuting_family(int nslices, std::uint64_t seed = 0,
                                        int k = 2);

// Blowup of a space along a commuting family: each slice coefficient
// S_v[i][j] contributes S_v[i][j] * G_v into block (i, j) of the result.
// The result is a (rows*k) x (cols*k) space over the family's variables,
// of bounded rank at most k * (bounded rank of e).
SpaceOfMatrices blowup(const SpaceOfMatrices& e, const CommutingFamily& fam);

// The 3 x 3 alternating space in normal-form coordinates; blowing it up
// along family_a / family_b reproduces the two 6 x 6 bounded-rank-4 spaces
// of the catalog entry-for-entry.
SpaceOfMatrices skewcw2_normal_form();
CommutingFamily family_a();
CommutingFamily family_b();

struct KronBoundedReport {
    int rows = 0, cols = 0;         // shape of the product space
    int rank = 0;                   // its exact bounded rank
    int factor_rank = 0;            // bounded rank of slice_space(t, A)
    int other_dim = 0;              // dim of the A factor of t2
    long bound = 0;                 // factor_rank * other_dim
    bool tight = false;             // rank == bound
};

// Bounded rank of the Kronecker product's A-slice space against the
// submultiplicative bound rank(E) * dim.
KronBoundedReport kron_bounded_report(const Tensor3& t, const Tensor3& t2);

}  // namespace brkit

#endif
