#include "brk/poly.hpp"

#include <stdexcept>

namespace brkit {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (!brkit::is_zero(c)) p.terms_.emplace(Mono(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int index, int nvars, const Rat& coeff) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    if (!brkit::is_zero(coeff)) {
        Mono m(nvars, 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), coeff);
    }
    return p;
}

MultiPoly MultiPoly::monomial(const Mono& m, const Rat& coeff) {
    MultiPoly p(static_cast<int>(m.size()));
    if (!brkit::is_zero(coeff)) p.terms_.emplace(m, coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("constant_value: not a constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_linear_form() const {
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) != 1) return false;
    return true;
}

Rat MultiPoly::coeff_of_var(int v) const {
    Mono m(nvars_, 0);
    m[v] = 1;
    return coeff_of(m);
}

Rat MultiPoly::coeff_of(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("add_term: exponent length mismatch");
    if (brkit::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (brkit::is_zero(it->second)) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly add: nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly sub: nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    out -= o;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly mul: nvars mismatch");
    MultiPoly out(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(nvars_);
    if (brkit::is_zero(c)) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("eval: point length mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        acc += term;
    }
    return acc;
}

const Mono& MultiPoly::lead_mono() const {
    if (terms_.empty()) throw std::domain_error("lead_mono: zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& MultiPoly::lead_coeff() const {
    if (terms_.empty()) throw std::domain_error("lead_coeff: zero polynomial");
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / lead_coeff());
}

MultiPoly divexact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw std::domain_error("divexact: division by zero");
    MultiPoly rem = p;
    MultiPoly quot(p.nvars());
    while (!rem.is_zero()) {
        const Mono& mr = rem.lead_mono();
        const Mono& mq = q.lead_mono();
        Mono diff(rem.nvars());
        for (int i = 0; i < rem.nvars(); ++i) {
            diff[i] = mr[i] - mq[i];
            if (diff[i] < 0) throw std::domain_error("divexact: not divisible");
        }
        MultiPoly t = MultiPoly::monomial(diff, rem.lead_coeff() / q.lead_coeff());
        quot += t;
        rem -= t * q;
    }
    return quot;
}

Rat poly_eval(const MultiPoly& p, const std::vector<Rat>& pt) { return p.eval(pt); }

namespace {

int degree_in(const MultiPoly& p, int v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m[v]);
    return d;
}

// Coefficients of p viewed as univariate in v; index = power of v, entries
// are polynomials not involving v (same nvars).
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int v) {
    std::vector<MultiPoly> out(degree_in(p, v) + 1, MultiPoly::zero(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int pow = rest[v];
        rest[v] = 0;
        out[pow].add_term(rest, c);
    }
    return out;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& cs, int v, int nvars) {
    MultiPoly out(nvars);
    for (size_t k = 0; k < cs.size(); ++k)
        for (const auto& [m, c] : cs[k].terms()) {
            Mono mm = m;
            mm[v] += static_cast<int>(k);
            out.add_term(mm, c);
        }
    return out;
}

MultiPoly poly_pow(const MultiPoly& p, int e) {
    MultiPoly acc = MultiPoly::constant(p.nvars(), Rat(1));
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

// gcd of the univariate-in-v coefficient list.
MultiPoly content_in(const MultiPoly& p, int v) {
    MultiPoly g = MultiPoly::zero(p.nvars());
    for (const auto& c : coeffs_in(p, v))
        if (!c.is_zero()) g = gcd_rec(g, c);
    return g;
}

// lc(b,v)^(delta+1) * a mod b, eliminating v; exact pseudo-remainder.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int v) {
    int db = degree_in(b, v);
    MultiPoly lb = coeffs_in(b, v)[db];
    MultiPoly r = a;
    int steps_left = degree_in(a, v) - db + 1;
    while (!r.is_zero() && degree_in(r, v) >= db) {
        int dr = degree_in(r, v);
        MultiPoly lr = coeffs_in(r, v)[dr];
        Mono shift(a.nvars(), 0);
        shift[v] = dr - db;
        r = r * lb - b * (lr * MultiPoly::monomial(shift, Rat(1)));
        --steps_left;
    }
    for (; steps_left > 0; --steps_left) r = r * lb;
    return r;
}

int max_var(const MultiPoly& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < p.nvars(); ++i)
            if (m[i] > 0) best = std::max(best, i);
    return best;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant())
        return MultiPoly::constant(p.nvars(), Rat(1));
    int v = std::max(max_var(p), max_var(q));
    int dp = degree_in(p, v), dq = degree_in(q, v);
    if (dp == 0) return gcd_rec(content_in(q, v), p);
    if (dq == 0) return gcd_rec(content_in(p, v), q);

    MultiPoly cont_p = content_in(p, v);
    MultiPoly cont_q = content_in(q, v);
    MultiPoly a = divexact(p, cont_p);
    MultiPoly b = divexact(q, cont_q);
    if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);

    MultiPoly g = MultiPoly::constant(p.nvars(), Rat(1));
    MultiPoly h = g;
    MultiPoly result;
    while (true) {
        int delta = degree_in(a, v) - degree_in(b, v);
        MultiPoly r = prem(a, b, v);
        if (r.is_zero()) {
            result = b;
            break;
        }
        if (degree_in(r, v) == 0) {
            result = MultiPoly::constant(p.nvars(), Rat(1));
            break;
        }
        a = b;
        b = divexact(r, g * poly_pow(h, delta));
        g = coeffs_in(a, v)[degree_in(a, v)];
        if (delta > 0) h = divexact(poly_pow(g, delta), poly_pow(h, delta - 1));
    }
    MultiPoly pp = result.is_constant() ? result : divexact(result, content_in(result, v));
    return (gcd_rec(cont_p, cont_q) * pp).monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars() != q.nvars())
        throw std::invalid_argument("poly_gcd: nvars mismatch");
    return gcd_rec(p, q).monic();
}

}  // namespace brkit
