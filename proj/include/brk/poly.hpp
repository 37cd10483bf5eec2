#ifndef BRK_POLY_HPP
#define BRK_POLY_HPP

#include <map>
#include <vector>

#include "brk/rational.hpp"

namespace brkit {

// Exponent vector; length always equals the owning polynomial's nvars.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded lexicographic order, earlier variable index dominating within a
// degree. Used for the canonical term order everywhere (leading terms,
// normalization, printing).
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int index, int nvars, const Rat& coeff = Rat(1));
    static MultiPoly monomial(const Mono& m, const Rat& coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    int total_degree() const;    // zero polynomial reports -1

    // True for the zero polynomial or a homogeneous degree-1 polynomial.
    bool is_linear_form() const;
    // Coefficient of the given variable; meaningful for linear forms.
    Rat coeff_of_var(int v) const;
    Rat coeff_of(const Mono& m) const;

    void add_term(const Mono& m, const Rat& c);  // accumulates, drops zeros

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rat eval(const std::vector<Rat>& point) const;

    // Leading term under grlex; requires a nonzero polynomial.
    const Mono& lead_mono() const;
    const Rat& lead_coeff() const;

    // Divide by the leading coefficient.
    MultiPoly monic() const;

    const std::map<Mono, Rat, GrlexLess>& terms() const { return terms_; }

private:
    int nvars_ = 0;
    std::map<Mono, Rat, GrlexLess> terms_;
};

// Exact quotient p / q; throws std::domain_error when q does not divide p.
MultiPoly divexact(const MultiPoly& p, const MultiPoly& q);

// Greatest common divisor via subresultant pseudo-remainder sequences with
// recursive content extraction; result is monic under grlex. gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

Rat poly_eval(const MultiPoly& p, const std::vector<Rat>& pt);

}  // namespace brkit

#endif
