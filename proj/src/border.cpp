#include "brk/border.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "brk/invariants.hpp"

namespace brkit {

TPoly tpoly_add(const TPoly& p, const TPoly& q) {
    TPoly out(std::max(p.size(), q.size()), Rat(0));
    for (size_t i = 0; i < p.size(); ++i) out[i] += p[i];
    for (size_t i = 0; i < q.size(); ++i) out[i] += q[i];
    while (!out.empty() && is_zero(out.back())) out.pop_back();
    return out;
}

TPoly tpoly_mul(const TPoly& p, const TPoly& q) {
    if (p.empty() || q.empty()) return {};
    TPoly out(p.size() + q.size() - 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) {
        if (is_zero(p[i])) continue;
        for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    while (!out.empty() && is_zero(out.back())) out.pop_back();
    return out;
}

Rat tpoly_coeff(const TPoly& p, long k) {
    if (k < 0 || k >= static_cast<long>(p.size())) return Rat(0);
    return p[k];
}

std::vector<Term> orbit_expand(const Decomposition& d, int a, int b, int c) {
    if (!d.cyclic) return d.terms;
    if (a != b || b != c)
        throw std::invalid_argument("orbit_expand: cyclic needs equal factor dimensions");
    std::vector<Term> out;
    for (const Term& t : d.terms) {
        out.push_back(t);
        out.push_back({t.w, t.u, t.v, t.shift});
        out.push_back({t.v, t.w, t.u, t.shift});
    }
    return out;
}

CheckResult check_decomposition(const Decomposition& d, const Tensor3& t) {
    int a = t.dim(0), b = t.dim(1), c = t.dim(2);
    CheckResult out;
    std::vector<Term> terms = orbit_expand(d, a, b, c);
    out.upper_bound = static_cast<long>(terms.size());
    for (const Term& tm : terms)
        if (static_cast<int>(tm.u.size()) != a || static_cast<int>(tm.v.size()) != b ||
            static_cast<int>(tm.w.size()) != c) {
            out.failure = "term vector lengths do not match the tensor dimensions";
            return out;
        }
    int offset = 0;
    for (const Term& tm : terms) offset = std::max(offset, -tm.shift);
    long top = d.scale + offset;
    out.scale = top;
    // Sum the decomposition entrywise up to order top; the certificate
    // matches when everything below top vanishes and order top equals T.
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            for (int k = 0; k < c; ++k) {
                TPoly acc;
                for (const Term& tm : terms) {
                    TPoly prod = tpoly_mul(tpoly_mul(tm.u[i], tm.v[j]), tm.w[k]);
                    if (prod.empty()) continue;
                    TPoly shifted(prod.size() + tm.shift + offset, Rat(0));
                    for (size_t s = 0; s < prod.size(); ++s)
                        shifted[s + tm.shift + offset] = prod[s];
                    acc = tpoly_add(acc, shifted);
                }
                for (long s = 0; s < top; ++s)
                    if (!is_zero(tpoly_coeff(acc, s))) {
                        std::ostringstream msg;
                        msg << "coefficient of t^" << s << " at entry (" << i + 1 << ","
                            << j + 1 << "," << k + 1 << ") is " << rat_str(tpoly_coeff(acc, s))
                            << ", want 0";
                        out.failure = msg.str();
                        return out;
                    }
                if (tpoly_coeff(acc, top) != t.at(i, j, k)) {
                    std::ostringstream msg;
                    msg << "coefficient of t^" << top << " at entry (" << i + 1 << ","
                        << j + 1 << "," << k + 1 << ") is " << rat_str(tpoly_coeff(acc, top))
                        << ", want " << rat_str(t.at(i, j, k));
                    out.failure = msg.str();
                    return out;
                }
            }
    out.ok = true;
    return out;
}

BoundsReport bounds_report(const Tensor3& t, const std::vector<Decomposition>& certs,
                           const BoundsOptions& opt) {
    BoundsReport out;
    try {
        if (opt.covectors.empty()) {
            long b = strassen_bound(t, opt.strassen_factor, opt.seed);
            out.lower.emplace_back("commutator (factor " + factor_name(opt.strassen_factor) + ")",
                                   b);
        } else {
            auto rep = border_substitution_check(t, opt.substitution_factor, opt.covectors,
                                                 opt.seed);
            out.lower.emplace_back(
                "commutator + substitution (factor " + factor_name(opt.substitution_factor) + ")",
                rep.final_bound);
        }
    } catch (const std::exception&) {
        // Non-square slices or no invertible member: no commutator bound.
    }
    if (opt.koszul_p > 0) {
        long b = koszul_bound(t, opt.koszul_p, opt.koszul_restrict, opt.seed);
        out.lower.emplace_back("exterior map (p=" + std::to_string(opt.koszul_p) + ", a'=" +
                                   std::to_string(opt.koszul_restrict) + ")",
                               b);
    }
    for (size_t i = 0; i < certs.size(); ++i) {
        CheckResult r = check_decomposition(certs[i], t);
        if (r.ok) {
            out.upper.emplace_back("certificate " + std::to_string(i + 1) + " at scale t^" +
                                       std::to_string(r.scale),
                                   r.upper_bound);
        } else {
            out.failures.push_back("certificate " + std::to_string(i + 1) + ": " + r.failure);
        }
    }
    return out;
}

std::string bounds_report_text(const BoundsReport& r) {
    std::ostringstream out;
    for (const auto& [label, v] : r.lower) out << "lower " << v << "  [" << label << "]\n";
    for (const auto& [label, v] : r.upper) out << "upper " << v << "  [" << label << "]\n";
    for (const std::string& f : r.failures) out << "FAILED " << f << "\n";
    return out.str();
}

}  // namespace brkit
