#ifndef BRK_BORDER_HPP
#define BRK_BORDER_HPP

#include <string>
#include <vector>

#include "brk/tensor.hpp"

namespace brkit {

// Polynomial in one parameter t: coefficients in ascending order, trailing
// zeros trimmed.  The zero polynomial is the empty vector.
using TPoly = std::vector<Rat>;

TPoly tpoly_add(const TPoly& p, const TPoly& q);
TPoly tpoly_mul(const TPoly& p, const TPoly& q);
Rat tpoly_coeff(const TPoly& p, long k);

// One rank-one summand u (x) v (x) w with polynomial entries.  A negative
// shift multiplies the whole term by t^shift, so the term may contribute
// below t^0; the verifier tracks a global offset to compensate.
struct Term {
    std::vector<TPoly> u;
    std::vector<TPoly> v;
    std::vector<TPoly> w;
    int shift = 0;
};

// A rank decomposition of t^scale * T (after applying the global offset
// induced by negative shifts).  With cyclic set, each stored term stands for
// its three cyclic rotations; expansion requires equal factor dimensions.
struct Decomposition {
    std::vector<Term> terms;
    bool cyclic = false;
    long scale = 0;
};

std::vector<Term> orbit_expand(const Decomposition& d, int a, int b, int c);

struct CheckResult {
    bool ok = false;
    long upper_bound = 0;  // number of terms after expansion
    long scale = 0;        // effective power of t matched (scale + offset shift)
    std::string failure;   // human-readable witness when ok is false
};

// Verifies that the decomposition sums to t^scale * T modulo t^(scale+1),
// with every coefficient below t^scale vanishing.  Orders above scale are
// ignored, as a border decomposition only needs the leading term.
CheckResult check_decomposition(const Decomposition& d, const Tensor3& t);

struct BoundsOptions {
    Factor strassen_factor = Factor::B;
    Factor substitution_factor = Factor::B;
    std::vector<QVec> covectors;  // enables the substitution refinement
    int koszul_p = 0;             // 0 disables the Koszul map bound
    int koszul_restrict = 0;
    std::uint64_t seed = 0;
};

struct BoundsReport {
    std::vector<std::pair<std::string, long>> lower;  // labelled lower bounds
    std::vector<std::pair<std::string, long>> upper;  // one per verified certificate
    std::vector<std::string> failures;                // certificates that did not verify
};

// Collects lower bounds (Strassen-type, optionally substitution-refined or
// Koszul) next to the upper bounds from the given certificates.
BoundsReport bounds_report(const Tensor3& t, const std::vector<Decomposition>& certs,
                           const BoundsOptions& opt = {});

std::string bounds_report_text(const BoundsReport& r);

}  // namespace brkit

#endif
