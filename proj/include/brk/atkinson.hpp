#ifndef BRK_ATKINSON_HPP
#define BRK_ATKINSON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brk/polymat.hpp"

namespace brkit {

// A space of bounded rank r, after constant row and column transforms P, Q
// chosen so that a maximal-rank member becomes diag(Id_r, 0):
//
//   P * E * Q = [ x  w ]    x: r x r,  w: r x (cols-r),
//               [ u  z ]    u: (rows-r) x r,  z: (rows-r) x (cols-r).
//
// Bounded rank r forces z == 0 and u x^k w == 0 for all k; both identities
// are certified symbolically by verify_normal_form.
struct AtkinsonForm {
    int r = 0;
    int rows = 0, cols = 0, nvars = 0;
    PolyMatrix x, w, u, z;
    QMat p, q;
    QVec pivot_point;  // evaluation point realizing rank r
};

// Largest rank of E at sampled integer points; a lower bound for the
// bounded rank, and equal to it for the sample sizes used here.
int generic_rank(const SpaceOfMatrices& e, std::uint64_t seed = 0, int samples = 30);

struct RankCertificate {
    int rank = 0;
    unsigned long long minors = 0;  // number of (rank+1)-minors checked, 0 if none exist
};

// Exact bounded rank via fraction-free elimination, re-certified by checking
// that every (rank+1)-minor vanishes identically.
RankCertificate certified_bounded_rank(const SpaceOfMatrices& e);

// Puts E into the block normal form above.  The pivot point is found by a
// seeded greedy search over sparse slice combinations with small
// coefficients, which keeps the transformed entries short.
AtkinsonForm to_normal_form(const SpaceOfMatrices& e, std::uint64_t seed = 0);

// Symbolic certificate: z == 0 and u x^k w == 0 for 0 <= k < r.
bool verify_normal_form(const AtkinsonForm& f);

struct AtkinsonNumbers {
    long at_l = 0;  // rank of [u; ux; ...; ux^(r-1)]
    long at_r = 0;  // rank of [w, xw, ..., x^(r-1)w]
};

// The two stabilized invariants of the normal form, computed symbolically;
// at_l + at_r <= r always holds for a valid form.
AtkinsonNumbers atkinson_numbers(const AtkinsonForm& f);

struct DInvariants {
    long d_u = 0;   // dim span of the coefficient slices of u
    long d_w = 0;   // dim span of the coefficient slices of w
    long d_uw = 0;  // dim span of the joint (u, w) coefficient pairs
};

DInvariants d_invariants(const AtkinsonForm& f);

// Structural flags that witness a decomposable or compression-like shape.
// Empty means the screen found nothing.
std::vector<std::string> imprimitivity_screen(const AtkinsonForm& f);

struct ExpandabilityReport {
    long ann_dim = 0;   // dim of rows phi of linear forms with phi * w == 0
    long at_l = 0;
    long threshold = 0;  // rows - r + 1
    bool fires = false;  // ann_dim == at_l == threshold
};

// Screens for a space that looks like a larger one with a row deleted.
ExpandabilityReport expandability_screen(const AtkinsonForm& f);

// Basis of columns psi of linear forms with m * psi == 0, each column given
// as cols(m) polynomial entries.  The basis is canonical (reduced echelon
// over the flattened coefficients).
std::vector<std::vector<MultiPoly>> linear_annihilator(const PolyMatrix& m);

struct GradedAnnihilator {
    int degree = 1;
    std::vector<std::vector<MultiPoly>> solutions;  // all homogeneous solutions
    std::vector<std::vector<MultiPoly>> submodule;  // lower-degree solutions times monomials
    std::vector<std::vector<MultiPoly>> primitive;  // canonical complement of the submodule
};

// Homogeneous degree-d columns annihilating m, split into the part generated
// in lower degrees and a primitive remainder.
GradedAnnihilator graded_annihilator(const PolyMatrix& m, int degree);

}  // namespace brkit

#endif
