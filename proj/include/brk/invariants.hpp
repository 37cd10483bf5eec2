#ifndef BRK_INVARIANTS_HPP
#define BRK_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "brk/tensor.hpp"

namespace brkit {

struct SymmetryReport {
    long extended = 0;  // nullity of (X,Y,Z) -> X.T + Y.T + Z.T
    long actual = 0;    // extended minus the trivial scalings it contains
};

SymmetryReport symmetry_algebra(const Tensor3& t);

struct KernelVector {
    std::vector<MultiPoly> v;
    int degree = 0;  // common total degree of the (primitive) entries
};

struct KernelPair {
    KernelVector right;  // column vector, m * right == 0
    KernelVector left;   // row vector, left * m == 0
};

// Kernel pair of a square corank-one space, from the adjugate divided by the
// gcd of its entries and normalized to a monic leading entry.  Throws
// std::domain_error unless the space is square of corank exactly one.
KernelPair corank1_kernel(const SpaceOfMatrices& e);

// A two-sided complex around a space: left * middle == 0 == middle * right.
struct MatrixComplex {
    PolyMatrix left;
    SpaceOfMatrices middle;
    PolyMatrix right;
};

struct ComplexVerification {
    bool left_zero = false;   // left * middle == 0 symbolically
    bool right_zero = false;  // middle * right == 0 symbolically
    int rank_left = 0, rank_middle = 0, rank_right = 0;
};

ComplexVerification verify_complex(const MatrixComplex& c);

// The two 6 x 6 bounded-rank-4 spaces each sit in an exact complex with a
// 2 x 6 map on the left and a 6 x 2 map on the right; entries fixed data.
MatrixComplex case3_complex();
MatrixComplex case4_complex();

// Lower bound on border rank from the rank of the exterior-algebra map
// Lambda^p A' (x) B* -> Lambda^(p+1) A' (x) C after restricting the first
// factor to a random subspace of dimension restrict_dim (needs
// 2p + 1 <= restrict_dim <= dim A).  Bound: ceil(rank / binom(a'-1, p)).
long koszul_bound(const Tensor3& t, int p, int restrict_dim, std::uint64_t seed = 0);

// Commutator lower bound on border rank at the given factor (slices must be
// square): m + ceil(rank[T(a0)^-1 M, T(a0)^-1 M'] / 2), maximized over
// seeded random pairs.  Throws when no invertible combination is found.
long strassen_bound(const Tensor3& t, Factor f, std::uint64_t seed = 0, int pairs = 10);

struct SubstitutionReport {
    long base = 0;                // the unrestricted commutator bound
    std::vector<bool> preserved;  // one flag per covector
    long final_bound = 0;         // base + 1 if every covector preserves base
};

// Border substitution refinement: restrict the factor to each covector's
// kernel and recompute the commutator bound inside the restricted span.  If
// every restriction preserves the full bound, the bound improves by one.
SubstitutionReport border_substitution_check(const Tensor3& t, Factor f,
                                             const std::vector<QVec>& covectors,
                                             std::uint64_t seed = 0);

}  // namespace brkit

#endif
