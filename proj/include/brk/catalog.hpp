#ifndef BRK_CATALOG_HPP
#define BRK_CATALOG_HPP

#include <string>

#include "brk/tensor.hpp"

namespace brkit::catalog {

// ---- spaces of matrices (matrices of linear forms) ----

// Maximal (k1,k2)-compression in b x c: the bottom-right
// (b-k1) x (c-k2) block is identically zero; every other entry is a
// fresh variable. Variables ordered row-major over the allowed cells.
SpaceOfMatrices compression(int k1, int k2, int b, int c);

// General m x m skew-symmetric matrix, m odd; binom(m,2) variables
// ordered by lexicographic pairs (i < j).
SpaceOfMatrices skew(int m);

// a x binom(a,2) presentation of v -> (w -> v ^ w); columns ordered by
// lexicographic pairs.
SpaceOfMatrices koszul(int a);

SpaceOfMatrices case1();  // skew(5)
SpaceOfMatrices case2();  // koszul(5)
SpaceOfMatrices case3();  // the 6 x 6 bounded-rank-4 space, first kind
SpaceOfMatrices case4();  // the 6 x 6 bounded-rank-4 space, second kind

// 3 x 3 space attached to the degenerate concise 3 x 3 x 3 tensor.
SpaceOfMatrices c3_degenerate();

// b x (2b-6) family of bounded rank b-2, b >= 5.
SpaceOfMatrices family_twoL1(int b);

// 3k x 3k family of bounded rank 2k: blocks
// [[a1 I, 0, -X], [0, a1 I, a2 I], [a2 I, X, 0]]. The default X is a
// k x k matrix of fresh variables; an explicit X (same variable space,
// linear entries) may be supplied instead.
SpaceOfMatrices family_3k(int k);
SpaceOfMatrices family_3k(int k, const PolyMatrix& x);

// The five concise 1-degenerate 5 x 5 spaces, key in {54,55,56,57,58}.
SpaceOfMatrices jplex(int key);

enum class PencilKind { L, Lt, Jor };
// Kronecker pencil blocks: L(k) is 2 x (k+1) in k variables, Lt(k) is
// 2 x k in k+1 variables, Jor(k, lambda) is 2 x k in k variables.
SpaceOfMatrices pencil_block(PencilKind kind, int k, const Rat& lambda = Rat(0));

// Two pencil blocks side by side over a shared fresh variable set.
SpaceOfMatrices pencil_pair(PencilKind kind1, int k1, const Rat& lam1,
                            PencilKind kind2, int k2, const Rat& lam2);

// ---- tensors ----

Tensor3 unit(int m);
Tensor3 wstate();
Tensor3 matmul(int n);
Tensor3 skewcw2();
Tensor3 sextonion_general(int k);
Tensor3 sextonion_algebra();

// ---- registry for the CLI ----

struct Entry {
    std::string name;
    std::string kind;    // "space" or "tensor"
    std::string params;  // human-readable parameter list
    std::string brief;
};

const std::vector<Entry>& entries();

struct Item {
    bool is_space = false;
    SpaceOfMatrices space;
    Tensor3 tensor;
};

// Build by registry name; throws std::invalid_argument on unknown names
// or bad parameter arity/values.
Item build(const std::string& name, const std::vector<long>& params);

}  // namespace brkit::catalog

#endif
