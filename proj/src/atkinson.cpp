#include "brk/atkinson.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "brk/rng.hpp"

namespace brkit {

namespace {

// Binomial coefficient, saturating at ULLONG_MAX / 2 to keep counts sane.
unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

int generic_rank(const SpaceOfMatrices& e, std::uint64_t seed, int samples) {
    Rng rng(seed);
    int best = 0;
    int cap = std::min(e.rows(), e.cols());
    for (int s = 0; s < samples && best < cap; ++s)
        best = std::max(best, rank_at(e, rng.point(e.nvars())));
    return best;
}

RankCertificate certified_bounded_rank(const SpaceOfMatrices& e) {
    RankCertificate out;
    out.rank = exact_rank(e);
    if (out.rank < std::min(e.rows(), e.cols())) {
        if (!all_minors_vanish(e, out.rank + 1))
            throw std::logic_error("certified_bounded_rank: minor certificate failed");
        out.minors = binom(e.rows(), out.rank + 1) * binom(e.cols(), out.rank + 1);
    }
    return out;
}

namespace {

// Constant invertible P (rows x rows), Q (cols x cols) with
// P * x0 * Q = diag(Id_r, 0).
std::pair<QMat, QMat> pivot_transform(const QMat& x0, int r) {
    int p = static_cast<int>(x0.size());
    int q = static_cast<int>(x0[0].size());
    QMat a(p, QVec(q + p, Rat(0)));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) a[i][j] = x0[i][j];
        a[i][q + i] = Rat(1);
    }
    std::vector<int> piv_all = qmat_rref(a);
    std::vector<int> piv;
    for (int c : piv_all)
        if (c < q) piv.push_back(c);
    if (static_cast<int>(piv.size()) != r)
        throw std::logic_error("pivot_transform: rank mismatch");
    QMat pmat(p, QVec(p)), ered(p, QVec(q));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) pmat[i][j] = a[i][q + j];
        for (int j = 0; j < q; ++j) ered[i][j] = a[i][j];
    }
    // Columns: permute pivots to the front, then clear the rest of the top
    // r rows by elementary column operations mirrored into Q.
    std::vector<int> perm = piv;
    for (int c = 0; c < q; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) perm.push_back(c);
    QMat qmat(q, QVec(q, Rat(0))), ep(p, QVec(q));
    for (int j = 0; j < q; ++j) {
        qmat[perm[j]][j] = Rat(1);
        for (int i = 0; i < p; ++i) ep[i][j] = ered[i][perm[j]];
    }
    for (int i = 0; i < r; ++i) {
        for (int j = r; j < q; ++j) {
            Rat f = ep[i][j];
            if (is_zero(f)) continue;
            for (int t = 0; t < q; ++t) qmat[t][j] -= f * qmat[t][i];
            for (int t = 0; t < p; ++t) ep[t][j] -= f * ep[t][i];
        }
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            if (ep[i][j] != ((i == j && i < r) ? Rat(1) : Rat(0)))
                throw std::logic_error("pivot_transform: reduction incomplete");
    return {pmat, qmat};
}

}  // namespace

AtkinsonForm to_normal_form(const SpaceOfMatrices& e, std::uint64_t seed) {
    if (!e.is_space_of_linear_forms())
        throw std::invalid_argument("to_normal_form: entries must be linear forms");
    int n = e.nvars();
    int r = exact_rank(e);
    if (r == 0) throw std::invalid_argument("to_normal_form: zero space");

    // Greedy sparse pivot: grow the support size, small coefficients first.
    // Sparse pivots keep the transformed blocks short.
    Rng rng(seed);
    QVec point;
    std::vector<int> idxs(n);
    std::iota(idxs.begin(), idxs.end(), 0);
    for (int size = 1; size <= n && point.empty(); ++size) {
        for (int attempt = 0; attempt < 50; ++attempt) {
            for (int i = 0; i < size; ++i)
                std::swap(idxs[i], idxs[i + rng.range(0, n - 1 - i)]);
            QVec pt(n, Rat(0));
            for (int i = 0; i < size; ++i) pt[idxs[i]] = rng.small_nonzero();
            if (rank_at(e, pt) == r) {
                point = pt;
                break;
            }
        }
    }
    if (point.empty())
        throw std::runtime_error(
            "to_normal_form: pivot search fails (after 50 seeded retries per support size)");

    auto [p, q] = pivot_transform(e.eval(point), r);
    PolyMatrix t = e.left_mul(p).right_mul(q);
    AtkinsonForm f;
    f.r = r;
    f.rows = e.rows();
    f.cols = e.cols();
    f.nvars = n;
    f.x = t.block(0, r, 0, r);
    f.w = t.block(0, r, r, e.cols());
    f.u = t.block(r, e.rows(), 0, r);
    f.z = t.block(r, e.rows(), r, e.cols());
    f.p = p;
    f.q = q;
    f.pivot_point = point;
    return f;
}

bool verify_normal_form(const AtkinsonForm& f) {
    if (!f.z.is_zero()) return false;
    if (f.rows == f.r) return true;  // no u block, nothing further to check
    PolyMatrix cur = f.u;
    for (int k = 0; k < f.r; ++k) {
        if (!(cur * f.w).is_zero()) return false;
        if (k + 1 < f.r) cur = cur * f.x;
    }
    return true;
}

AtkinsonNumbers atkinson_numbers(const AtkinsonForm& f) {
    AtkinsonNumbers out;
    int pr = f.rows - f.r, qc = f.cols - f.r;
    if (pr > 0) {
        PolyMatrix stacked(pr * f.r, f.r, f.nvars);
        PolyMatrix cur = f.u;
        for (int k = 0; k < f.r; ++k) {
            for (int i = 0; i < pr; ++i)
                for (int j = 0; j < f.r; ++j) stacked.at(k * pr + i, j) = cur.at(i, j);
            if (k + 1 < f.r) cur = cur * f.x;
        }
        out.at_l = exact_rank(stacked);
    }
    if (qc > 0) {
        PolyMatrix wide(f.r, qc * f.r, f.nvars);
        PolyMatrix cur = f.w;
        for (int k = 0; k < f.r; ++k) {
            for (int i = 0; i < f.r; ++i)
                for (int j = 0; j < qc; ++j) wide.at(i, k * qc + j) = cur.at(i, j);
            if (k + 1 < f.r) cur = f.x * cur;
        }
        out.at_r = exact_rank(wide);
    }
    return out;
}

namespace {

std::vector<QVec> coefficient_vectors(const PolyMatrix& m) {
    std::vector<QVec> out;
    for (const QMat& s : m.slices()) {
        QVec v;
        for (const auto& row : s)
            for (const Rat& x : row) v.push_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

bool nonzero_vec(const QVec& v) {
    return std::any_of(v.begin(), v.end(), [](const Rat& x) { return !is_zero(x); });
}

long span_dim_nonzero(std::vector<QVec> vecs) {
    std::erase_if(vecs, [](const QVec& v) { return !nonzero_vec(v); });
    return vecs.empty() ? 0 : span_dim(vecs);
}

// dim of the span of the columns of m, viewed as vectors of polynomials.
long poly_col_span_dim(const PolyMatrix& m) {
    std::map<Mono, int, GrlexLess> monos;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (const auto& [mono, c] : m.at(i, j).terms()) monos.emplace(mono, 0);
    int k = 0;
    for (auto& [mono, ix] : monos) ix = k++;
    std::vector<QVec> cols;
    for (int j = 0; j < m.cols(); ++j) {
        QVec v(static_cast<size_t>(m.rows()) * monos.size(), Rat(0));
        for (int i = 0; i < m.rows(); ++i)
            for (const auto& [mono, c] : m.at(i, j).terms())
                v[i * monos.size() + monos.at(mono)] = c;
        cols.push_back(std::move(v));
    }
    return span_dim_nonzero(std::move(cols));
}

}  // namespace

DInvariants d_invariants(const AtkinsonForm& f) {
    DInvariants out;
    auto uv = coefficient_vectors(f.u);
    auto wv = coefficient_vectors(f.w);
    std::vector<QVec> joint(uv.size());
    for (size_t i = 0; i < uv.size(); ++i) {
        joint[i] = uv[i];
        joint[i].insert(joint[i].end(), wv[i].begin(), wv[i].end());
    }
    out.d_u = span_dim_nonzero(std::move(uv));
    out.d_w = span_dim_nonzero(std::move(wv));
    out.d_uw = span_dim_nonzero(std::move(joint));
    return out;
}

std::vector<std::string> imprimitivity_screen(const AtkinsonForm& f) {
    DInvariants d = d_invariants(f);
    std::vector<std::string> flags;
    if (f.r == f.cols - 1 && d.d_u == 1) flags.push_back("dU=1,r=c-1");
    if (f.r == f.rows - 1 && d.d_w == 1) flags.push_back("dW=1,r=b-1");
    if (f.rows > f.r && poly_col_span_dim(f.u) <= 1) flags.push_back("U one-column");
    if (f.cols > f.r && poly_col_span_dim(f.w.transpose()) <= 1) flags.push_back("W one-row");
    return flags;
}

namespace {

// dim of rows phi of linear forms (in the variables appearing in w) with
// phi * w == 0.  Restricting to appearing variables matches the screen's
// intent: it measures relations inside the block, not ambient slack.
long linear_row_annihilator_dim(const PolyMatrix& w) {
    int r = w.rows(), q = w.cols(), n = w.nvars();
    std::vector<int> used;
    {
        std::vector<bool> seen(n, false);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < q; ++j)
                for (const auto& [mono, c] : w.at(i, j).terms())
                    for (int v = 0; v < n; ++v)
                        if (mono[v]) seen[v] = true;
        for (int v = 0; v < n; ++v)
            if (seen[v]) used.push_back(v);
    }
    if (used.empty()) return 0;
    int nu = static_cast<int>(used.size());
    int cols = r * nu;
    std::map<std::pair<int, Mono>, int> keyix;
    std::vector<std::tuple<int, int, Rat>> entries;  // (row key, col, coeff)
    for (int t = 0; t < r; ++t)
        for (int vi = 0; vi < nu; ++vi) {
            int col = t * nu + vi;
            for (int j = 0; j < q; ++j)
                for (const auto& [mono, c] : w.at(t, j).terms()) {
                    Mono mm = mono;
                    mm[used[vi]] += 1;
                    auto [it, fresh] = keyix.emplace(std::make_pair(j, mm),
                                                     static_cast<int>(keyix.size()));
                    entries.emplace_back(it->second, col, c);
                }
        }
    QMat a(keyix.size(), QVec(cols, Rat(0)));
    for (auto& [row, col, c] : entries) a[row][col] += c;
    return a.empty() ? cols : static_cast<long>(qmat_nullspace(a, cols).size());
}

}  // namespace

ExpandabilityReport expandability_screen(const AtkinsonForm& f) {
    ExpandabilityReport out;
    out.ann_dim = linear_row_annihilator_dim(f.w);
    out.at_l = atkinson_numbers(f).at_l;
    out.threshold = f.rows - f.r + 1;
    out.fires = out.ann_dim == out.at_l && out.at_l == out.threshold;
    return out;
}

namespace {

std::vector<Mono> monomials_of_degree(int nvars, int d) {
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    // Lexicographic enumeration by recursion on the first variable.
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == nvars - 1) {
            cur[v] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[v] = e;
            self(self, v + 1, left - e);
        }
    };
    if (nvars > 0) rec(rec, 0, d);
    return out;
}

// All homogeneous degree-d solutions psi (columns of m-annihilating
// polynomial vectors), as coefficient vectors over cols(m) x monos blocks.
std::vector<QVec> homogeneous_solutions(const PolyMatrix& m, int d,
                                        const std::vector<Mono>& monos) {
    int q = m.cols(), nm = static_cast<int>(monos.size());
    int cols = q * nm;
    std::map<std::pair<int, Mono>, int> keyix;
    std::vector<std::tuple<int, int, Rat>> entries;
    for (int e = 0; e < q; ++e)
        for (int mi = 0; mi < nm; ++mi) {
            int col = e * nm + mi;
            for (int i = 0; i < m.rows(); ++i)
                for (const auto& [mono, c] : m.at(i, e).terms()) {
                    Mono mm = mono;
                    for (int v = 0; v < m.nvars(); ++v) mm[v] += monos[mi][v];
                    auto [it, fresh] = keyix.emplace(std::make_pair(i, mm),
                                                     static_cast<int>(keyix.size()));
                    entries.emplace_back(it->second, col, c);
                }
        }
    if (keyix.empty()) {
        std::vector<QVec> basis;
        for (int i = 0; i < cols; ++i) {
            QVec v(cols, Rat(0));
            v[i] = Rat(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    QMat a(keyix.size(), QVec(cols, Rat(0)));
    for (auto& [row, col, c] : entries) a[row][col] += c;
    return qmat_nullspace(a, cols);
}

std::vector<MultiPoly> vec_to_columns(const QVec& v, int q, int nvars,
                                      const std::vector<Mono>& monos) {
    std::vector<MultiPoly> psi(q, MultiPoly::zero(nvars));
    int nm = static_cast<int>(monos.size());
    for (int e = 0; e < q; ++e)
        for (int mi = 0; mi < nm; ++mi)
            if (!is_zero(v[e * nm + mi])) psi[e].add_term(monos[mi], v[e * nm + mi]);
    return psi;
}

QVec columns_to_vec(const std::vector<MultiPoly>& psi,
                    const std::map<Mono, int, GrlexLess>& ix, int nm) {
    QVec v(psi.size() * nm, Rat(0));
    for (size_t e = 0; e < psi.size(); ++e)
        for (const auto& [mono, c] : psi[e].terms()) v[e * nm + ix.at(mono)] = c;
    return v;
}

}  // namespace

std::vector<std::vector<MultiPoly>> linear_annihilator(const PolyMatrix& m) {
    return graded_annihilator(m, 1).solutions;
}

GradedAnnihilator graded_annihilator(const PolyMatrix& m, int degree) {
    if (degree < 1) throw std::invalid_argument("graded_annihilator: degree must be >= 1");
    GradedAnnihilator out;
    out.degree = degree;
    int q = m.cols(), n = m.nvars();
    auto monos = monomials_of_degree(n, degree);
    std::map<Mono, int, GrlexLess> ix;
    for (size_t i = 0; i < monos.size(); ++i) ix.emplace(monos[i], static_cast<int>(i));
    int nm = static_cast<int>(monos.size());

    auto sols = homogeneous_solutions(m, degree, monos);
    for (const QVec& v : sols) out.solutions.push_back(vec_to_columns(v, q, n, monos));

    // Submodule: lower-degree solutions multiplied up to this degree.
    std::vector<QVec> sub_vecs;
    for (int e = 1; e < degree; ++e) {
        auto lower_monos = monomials_of_degree(n, e);
        auto lower = homogeneous_solutions(m, e, lower_monos);
        auto mult = monomials_of_degree(n, degree - e);
        for (const QVec& lv : lower) {
            auto psi = vec_to_columns(lv, q, n, lower_monos);
            for (const Mono& mu : mult) {
                std::vector<MultiPoly> lifted;
                lifted.reserve(psi.size());
                for (const MultiPoly& p : psi) lifted.push_back(p * MultiPoly::monomial(mu, Rat(1)));
                sub_vecs.push_back(columns_to_vec(lifted, ix, nm));
            }
        }
    }
    std::erase_if(sub_vecs, [](const QVec& v) { return !nonzero_vec(v); });
    QMat sub_mat = sub_vecs;
    std::vector<int> sub_piv = qmat_rref(sub_mat);
    for (size_t i = 0; i < sub_piv.size(); ++i)
        out.submodule.push_back(vec_to_columns(sub_mat[i], q, n, monos));

    // Primitive part: reduce each solution modulo the submodule pivots, then
    // canonicalize the survivors.
    std::vector<QVec> reduced;
    for (const QVec& sv : sols) {
        QVec v = sv;
        for (size_t i = 0; i < sub_piv.size(); ++i) {
            Rat f = v[sub_piv[i]];
            if (is_zero(f)) continue;
            for (int t = 0; t < nm * q; ++t) v[t] -= f * sub_mat[i][t];
        }
        if (nonzero_vec(v)) reduced.push_back(std::move(v));
    }
    QMat prim_mat = reduced;
    std::vector<int> prim_piv = qmat_rref(prim_mat);
    for (size_t i = 0; i < prim_piv.size(); ++i)
        out.primitive.push_back(vec_to_columns(prim_mat[i], q, n, monos));
    return out;
}

}  // namespace brkit
