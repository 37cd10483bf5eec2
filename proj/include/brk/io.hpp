#ifndef BRK_IO_HPP
#define BRK_IO_HPP

#include <iosfwd>
#include <string>

#include "brk/border.hpp"
#include "brk/polymat.hpp"
#include "brk/tensor.hpp"

namespace brkit {

// ---------------------------------------------------------------- strings
//
// Linear forms print over variables a1..aN: "a1 - 2/3*a4", zero as "0".
// Polynomials in t print in ascending powers: "1 - 3/4*t^3 + t^5".
// Both parsers accept exactly what the printers emit (plus flexible
// whitespace) and report offending input verbatim.

std::string linear_form_str(const MultiPoly& f);
MultiPoly parse_linear_form(const std::string& s, int nvars);

// General polynomials print leading term first: "a3*a6 - a4*a5 + 2*a1^2".
// Display only; there is no matching parser.
std::string poly_str(const MultiPoly& f);

std::string tpoly_str(const TPoly& p);
TPoly parse_tpoly(const std::string& s);

// ------------------------------------------------------------------ files
//
// Tensor files: header "tensor a b c", then one entry per line as
// "i j k num/den" with 1-based indices.  '#' starts a comment.  Duplicate
// entries and nonpositive denominators are rejected.
//
// Space files: header "space nvars rows cols", then either rows of
// comma-separated linear forms over a1..aN (the canonical form, as printed)
// or "slice i" blocks, each followed by rows x cols rational entries.
//
// Certificate files are JSON: {"scale": s, "cyclic": bool, "terms": [...]},
// each term {"u": [...], "v": [...], "w": [...]} of polynomial strings in t
// with an optional integer "shift".

Tensor3 read_tensor(std::istream& in);
Tensor3 read_tensor_file(const std::string& path);
void write_tensor(std::ostream& out, const Tensor3& t);
std::string tensor_to_string(const Tensor3& t);

SpaceOfMatrices read_space(std::istream& in);
SpaceOfMatrices read_space_file(const std::string& path);
void write_space(std::ostream& out, const SpaceOfMatrices& e);
std::string space_to_string(const SpaceOfMatrices& e);

Decomposition read_cert(std::istream& in);
Decomposition read_cert_file(const std::string& path);
void write_cert(std::ostream& out, const Decomposition& d);
std::string cert_to_string(const Decomposition& d);

}  // namespace brkit

#endif
