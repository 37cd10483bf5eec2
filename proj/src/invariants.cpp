#include "brk/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "brk/catalog.hpp"
#include "brk/rng.hpp"

namespace brkit {

SymmetryReport symmetry_algebra(const Tensor3& t) {
    int a = t.dim(0), b = t.dim(1), c = t.dim(2);
    int nun = a * a + b * b + c * c;
    std::map<std::array<int, 3>, QVec> rows;
    auto row_of = [&](std::array<int, 3> key) -> QVec& {
        auto [it, fresh] = rows.try_emplace(key);
        if (fresh) it->second.assign(nun, Rat(0));
        return it->second;
    };
    for (const auto& [ix, v] : t.entries()) {
        auto [i, j, k] = ix;
        for (int ip = 0; ip < a; ++ip) row_of({ip, j, k})[ip * a + i] += v;
        for (int jp = 0; jp < b; ++jp) row_of({i, jp, k})[a * a + jp * b + j] += v;
        for (int kp = 0; kp < c; ++kp) row_of({i, j, kp})[a * a + b * b + kp * c + k] += v;
    }
    QMat m;
    m.reserve(rows.size());
    for (auto& [key, row] : rows) m.push_back(std::move(row));
    std::vector<QVec> ns = qmat_nullspace(m, nun);

    SymmetryReport out;
    out.extended = static_cast<long>(ns.size());
    if (ns.empty()) return out;
    std::vector<QVec> triv;
    for (auto [lm, mm, nn] : {std::array<int, 3>{1, -1, 0}, {1, 0, -1}}) {
        QVec v(nun, Rat(0));
        for (int i = 0; i < a; ++i) v[i * a + i] = Rat(lm);
        for (int j = 0; j < b; ++j) v[a * a + j * b + j] = Rat(mm);
        for (int k = 0; k < c; ++k) v[a * a + b * b + k * c + k] = Rat(nn);
        triv.push_back(std::move(v));
    }
    std::vector<QVec> unions = ns;
    unions.insert(unions.end(), triv.begin(), triv.end());
    long inter = span_dim(ns) + span_dim(triv) - span_dim(unions);
    out.actual = out.extended - inter;
    return out;
}

KernelPair corank1_kernel(const SpaceOfMatrices& e) {
    if (e.rows() != e.cols())
        throw std::domain_error("corank1_kernel: space must be square");
    int n = e.rows();
    if (exact_rank(e) != n - 1)
        throw std::domain_error("corank1_kernel: space is not corank one");
    PolyMatrix adj = adjugate(e);

    auto extract = [&](bool column) -> KernelVector {
        // The adjugate has rank one, so any nonzero column (row) spans the
        // right (left) kernel; take the first and reduce it.
        std::vector<MultiPoly> vec;
        for (int a = 0; a < n && vec.empty(); ++a) {
            std::vector<MultiPoly> cand;
            bool nonzero = false;
            for (int b = 0; b < n; ++b) {
                const MultiPoly& p = column ? adj.at(b, a) : adj.at(a, b);
                nonzero = nonzero || !p.is_zero();
                cand.push_back(p);
            }
            if (nonzero) vec = std::move(cand);
        }
        if (vec.empty()) throw std::logic_error("corank1_kernel: adjugate vanished");
        MultiPoly g;
        bool have = false;
        for (const MultiPoly& p : vec) {
            if (p.is_zero()) continue;
            g = have ? poly_gcd(g, p) : p;
            have = true;
        }
        KernelVector out;
        out.v.reserve(vec.size());
        for (const MultiPoly& p : vec)
            out.v.push_back(p.is_zero() ? p : divexact(p, g));
        for (MultiPoly& p : out.v)
            if (!p.is_zero()) {
                Rat lead = p.lead_coeff();
                for (MultiPoly& q : out.v) q = q * Rat(1 / lead);
                break;
            }
        for (const MultiPoly& p : out.v)
            out.degree = std::max(out.degree, p.total_degree());
        return out;
    };
    KernelPair pair;
    pair.right = extract(true);
    pair.left = extract(false);
    return pair;
}

ComplexVerification verify_complex(const MatrixComplex& c) {
    ComplexVerification out;
    out.left_zero = (c.left * c.middle).is_zero();
    out.right_zero = (c.middle * c.right).is_zero();
    out.rank_left = exact_rank(c.left);
    out.rank_middle = exact_rank(c.middle);
    out.rank_right = exact_rank(c.right);
    return out;
}

namespace {

using LF = std::vector<std::pair<int, long>>;  // linear form: (1-based var, coeff)

PolyMatrix from_rows(const std::vector<std::vector<LF>>& rows, int nvars) {
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), nvars);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            for (auto [var, c] : rows[i][j])
                m.at(static_cast<int>(i), static_cast<int>(j)) +=
                    MultiPoly::variable(var - 1, nvars, Rat(c));
    return m;
}

}  // namespace

MatrixComplex case3_complex() {
    MatrixComplex c;
    c.middle = catalog::case3();
    c.right = from_rows({{{{3, 1}}, {{5, 1}}},
                         {{{4, 1}}, {{6, 1}}},
                         {{{2, -1}}, {}},
                         {{}, {{2, -1}}},
                         {{{1, 1}}, {}},
                         {{}, {{1, 1}}}},
                        6);
    c.left = from_rows({{{{2, -1}}, {}, {{3, -1}}, {{5, -1}}, {{1, 1}}, {}},
                        {{}, {{2, -1}}, {{4, -1}}, {{6, -1}}, {}, {{1, 1}}}},
                       6);
    return c;
}

MatrixComplex case4_complex() {
    MatrixComplex c;
    c.middle = catalog::case4();
    c.right = from_rows({{{{5, 1}}, {{6, 1}}},
                         {{}, {{5, 1}}},
                         {{{3, -1}}, {{4, -1}}},
                         {{}, {{3, -1}}},
                         {{{1, 1}}, {{2, 1}}},
                         {{}, {{1, 1}}}},
                        6);
    c.left = from_rows({{{{3, -1}}, {{4, -1}}, {{5, -1}}, {{6, -1}}, {{1, 1}}, {{2, 1}}},
                        {{}, {{3, -1}}, {}, {{5, -1}}, {}, {{1, 1}}}},
                       6);
    return c;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

long binom_l(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

long koszul_bound(const Tensor3& t, int p, int restrict_dim, std::uint64_t seed) {
    int a = t.dim(0), b = t.dim(1), c = t.dim(2);
    if (p < 1) throw std::invalid_argument("koszul_bound: need p >= 1");
    if (restrict_dim < 2 * p + 1 || restrict_dim > a)
        throw std::invalid_argument("koszul_bound: need 2p+1 <= restrict_dim <= dim A");
    int ap = restrict_dim;
    Rng rng(seed);
    std::vector<QMat> sl = tensor_slices(t, Factor::A);
    // Random full-rank projection of the A factor.
    QMat proj;
    do {
        proj.assign(ap, QVec(a));
        for (auto& row : proj)
            for (Rat& x : row) x = Rat(rng.range(-9, 9));
    } while (qmat_rank(proj) != ap);
    std::vector<QMat> slp(ap, qmat_zero(b, c));
    for (int r = 0; r < ap; ++r)
        for (int ix = 0; ix < a; ++ix) {
            if (is_zero(proj[r][ix])) continue;
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < c; ++j) slp[r][i][j] += proj[r][ix] * sl[ix][i][j];
        }

    auto low = subsets(ap, p);
    auto high = subsets(ap, p + 1);
    std::map<std::vector<int>, int> high_ix;
    for (size_t i = 0; i < high.size(); ++i) high_ix.emplace(high[i], static_cast<int>(i));

    QMat m(low.size() * b, QVec(high.size() * c, Rat(0)));
    for (size_t si = 0; si < low.size(); ++si) {
        const std::vector<int>& s = low[si];
        for (int i = 0; i < ap; ++i) {
            if (std::binary_search(s.begin(), s.end(), i)) continue;
            std::vector<int> up = s;
            up.insert(std::upper_bound(up.begin(), up.end(), i), i);
            int pos = static_cast<int>(std::lower_bound(up.begin(), up.end(), i) - up.begin());
            int sign = pos % 2 ? -1 : 1;
            long col0 = static_cast<long>(high_ix.at(up)) * c;
            for (int j = 0; j < b; ++j)
                for (int k = 0; k < c; ++k)
                    m[si * b + j][col0 + k] += Rat(sign) * slp[i][j][k];
        }
    }
    long rank = qmat_rank(m);
    long denom = binom_l(ap - 1, p);
    return (rank + denom - 1) / denom;
}

namespace {

// Commutator bound over a list of square slices: m + ceil(rank/2) maximized
// over seeded random pairs.  Returns -1 when no invertible combination of
// the slices turns up.
long commutator_bound(const std::vector<QMat>& slices, int m, Rng& rng, int pairs) {
    if (slices.empty()) return -1;
    int n = static_cast<int>(slices[0].size());
    auto combo = [&]() {
        QMat x = qmat_zero(n, n);
        for (const QMat& s : slices) {
            Rat c = Rat(rng.range(-9, 9));
            if (is_zero(c)) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) x[i][j] += c * s[i][j];
        }
        return x;
    };
    long best = -1;
    for (int t = 0; t < pairs; ++t) {
        QMat inv;
        bool found = false;
        for (int attempt = 0; attempt < 50 && !found; ++attempt) {
            try {
                inv = qmat_inverse(combo());
                found = true;
            } catch (const std::invalid_argument&) {
            }
        }
        if (!found) continue;
        QMat x = qmat_mul(inv, combo());
        QMat y = qmat_mul(inv, combo());
        QMat comm = qmat_mul(x, y), yx = qmat_mul(y, x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) comm[i][j] -= yx[i][j];
        best = std::max(best, static_cast<long>(m + (qmat_rank(comm) + 1) / 2));
    }
    return best;
}

}  // namespace

long strassen_bound(const Tensor3& t, Factor f, std::uint64_t seed, int pairs) {
    std::vector<QMat> sl = tensor_slices(t, f);
    if (sl.empty() || sl[0].empty() || sl[0].size() != sl[0][0].size())
        throw std::invalid_argument("strassen_bound: slices must be square");
    Rng rng(seed);
    long bound = commutator_bound(sl, t.dim(f), rng, pairs);
    if (bound < 0)
        throw std::runtime_error("strassen_bound: no invertible slice combination found");
    return bound;
}

SubstitutionReport border_substitution_check(const Tensor3& t, Factor f,
                                             const std::vector<QVec>& covectors,
                                             std::uint64_t seed) {
    std::vector<QMat> sl = tensor_slices(t, f);
    if (sl.empty() || sl[0].empty() || sl[0].size() != sl[0][0].size())
        throw std::invalid_argument("border_substitution_check: slices must be square");
    int m = t.dim(f);
    int n = static_cast<int>(sl[0].size());
    Rng rng(seed);
    SubstitutionReport out;
    out.base = commutator_bound(sl, m, rng, 10);
    if (out.base < 0)
        throw std::runtime_error("border_substitution_check: no invertible combination");
    bool all = true;
    for (const QVec& cov : covectors) {
        if (static_cast<int>(cov.size()) != m)
            throw std::invalid_argument("border_substitution_check: covector length mismatch");
        std::vector<QVec> ker = qmat_nullspace({cov}, m);
        std::vector<QMat> restricted;
        for (const QVec& xi : ker) {
            QMat s = qmat_zero(n, n);
            for (int v = 0; v < m; ++v) {
                if (is_zero(xi[v])) continue;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) s[i][j] += xi[v] * sl[v][i][j];
            }
            restricted.push_back(std::move(s));
        }
        // The restricted bound keeps the full factor dimension m, so matching
        // the base certifies that this hyperplane loses nothing.
        long b = commutator_bound(restricted, m, rng, 10);
        bool ok = b == out.base;
        out.preserved.push_back(ok);
        all = all && ok;
    }
    out.final_bound = all && !covectors.empty() ? out.base + 1 : out.base;
    return out;
}

}  // namespace brkit
