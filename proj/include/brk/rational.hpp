#ifndef BRK_RATIONAL_HPP
#define BRK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace brkit {

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0.
using Rat = mpq_class;

// mpq_class(n, d) stores n/d without reducing; canonicalize explicitly.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// "n" when the denominator is 1, otherwise "n/d".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "n" or "n/d" with d > 0 after reduction of sign.
Rat parse_rat(const std::string& text);

}  // namespace brkit

#endif
