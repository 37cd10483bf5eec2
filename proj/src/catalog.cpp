#include "brk/catalog.hpp"

#include <stdexcept>

#include "brk/constructions.hpp"

namespace brkit::catalog {

namespace {

// Linear-form shorthand: list of (0-based variable, integer coeff) pairs.
using LF = std::vector<std::pair<int, long>>;

SpaceOfMatrices from_rows(const std::vector<std::vector<LF>>& rows, int nvars) {
    int b = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    PolyMatrix m(b, c, nvars);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < c; ++j)
            for (const auto& [v, coeff] : rows[i][j])
                m.at(i, j) += MultiPoly::variable(v, nvars, make_rat(coeff));
    return m;
}

}  // namespace

SpaceOfMatrices compression(int k1, int k2, int b, int c) {
    if (k1 < 0 || k2 < 0 || k1 > b || k2 > c || b < 1 || c < 1)
        throw std::invalid_argument("compression: need 0 <= k1 <= b, 0 <= k2 <= c");
    int nvars = b * c - (b - k1) * (c - k2);
    PolyMatrix m(b, c, nvars);
    int v = 0;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < c; ++j) {
            if (i >= k1 && j >= k2) continue;
            m.at(i, j) = MultiPoly::variable(v++, nvars);
        }
    return m;
}

SpaceOfMatrices skew(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("skew: size must be odd and at least 3");
    int nvars = m * (m - 1) / 2;
    PolyMatrix s(m, m, nvars);
    int v = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            s.at(i, j) = MultiPoly::variable(v, nvars);
            s.at(j, i) = MultiPoly::variable(v, nvars, Rat(-1));
            ++v;
        }
    return s;
}

SpaceOfMatrices koszul(int a) {
    if (a < 2) throw std::invalid_argument("koszul: need a >= 2");
    int ncols = a * (a - 1) / 2;
    PolyMatrix m(a, ncols, a);
    int col = 0;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            // column (i,j): coeff of e_i ^ e_j in (sum_v a_v e_v) ^ e_row
            m.at(j, col) = MultiPoly::variable(i, a);
            m.at(i, col) += MultiPoly::variable(j, a, Rat(-1));
            ++col;
        }
    return m;
}

SpaceOfMatrices case1() { return skew(5); }
SpaceOfMatrices case2() { return koszul(5); }

SpaceOfMatrices case3() {
    const std::vector<std::vector<LF>> rows = {
        {{{0, 1}}, {}, {}, {}, {{2, -1}}, {{4, -1}}},
        {{}, {{0, 1}}, {}, {}, {{3, -1}}, {{5, -1}}},
        {{}, {}, {{0, 1}}, {}, {{1, 1}}, {}},
        {{}, {}, {}, {{0, 1}}, {}, {{1, 1}}},
        {{{1, 1}}, {}, {{2, 1}}, {{4, 1}}, {}, {}},
        {{}, {{1, 1}}, {{3, 1}}, {{5, 1}}, {}, {}},
    };
    return from_rows(rows, 6);
}

SpaceOfMatrices case4() {
    const std::vector<std::vector<LF>> rows = {
        {{{0, 1}}, {{1, 1}}, {}, {}, {{4, -1}}, {{5, -1}}},
        {{}, {{0, 1}}, {}, {}, {}, {{4, -1}}},
        {{}, {}, {{0, 1}}, {{1, 1}}, {{2, 1}}, {{3, 1}}},
        {{}, {}, {}, {{0, 1}}, {}, {{2, 1}}},
        {{{2, 1}}, {{3, 1}}, {{4, 1}}, {{5, 1}}, {}, {}},
        {{}, {{2, 1}}, {}, {{4, 1}}, {}, {}},
    };
    return from_rows(rows, 6);
}

SpaceOfMatrices c3_degenerate() {
    const std::vector<std::vector<LF>> rows = {
        {{{0, 1}}, {{1, 1}}, {{2, 1}}},
        {{}, {{0, 1}}, {}},
        {{}, {{2, 1}}, {}},
    };
    return from_rows(rows, 3);
}

SpaceOfMatrices family_twoL1(int b) {
    if (b < 5) throw std::invalid_argument("family_twoL1: need b >= 5");
    int p = b - 3;
    int n = 2 * p;
    PolyMatrix m(b, 2 * p, n);
    for (int i = 0; i <= p; ++i) {
        m.at(i, i) = MultiPoly::variable(0, n);
        if (i == 0) {
            for (int t = 0; t < p - 1; ++t)
                m.at(0, p + 1 + t) = MultiPoly::variable(2 + 2 * t, n, Rat(-1));
        } else if (i == 1) {
            for (int t = 0; t < p - 1; ++t)
                m.at(1, p + 1 + t) = MultiPoly::variable(3 + 2 * t, n, Rat(-1));
        } else {
            m.at(i, p + 1 + (i - 2)) = MultiPoly::variable(1, n);
        }
    }
    m.at(p + 1, 0) = MultiPoly::variable(1, n, Rat(-1));
    m.at(p + 2, 1) = MultiPoly::variable(1, n, Rat(-1));
    for (int t = 0; t < p - 1; ++t) {
        m.at(p + 1, 2 + t) = MultiPoly::variable(2 + 2 * t, n, Rat(-1));
        m.at(p + 2, 2 + t) = MultiPoly::variable(3 + 2 * t, n, Rat(-1));
    }
    return m;
}

SpaceOfMatrices family_3k(int k) {
    if (k < 1) throw std::invalid_argument("family_3k: need k >= 1");
    int n = 2 + k * k;
    PolyMatrix x(k, k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            x.at(i, j) = MultiPoly::variable(2 + i * k + j, n);
    return family_3k(k, x);
}

SpaceOfMatrices family_3k(int k, const PolyMatrix& x) {
    if (x.rows() != k || x.cols() != k)
        throw std::invalid_argument("family_3k: X must be k x k");
    int n = x.nvars();
    if (n < 2) throw std::invalid_argument("family_3k: X needs at least 2 variables");
    PolyMatrix m(3 * k, 3 * k, n);
    for (int i = 0; i < k; ++i) {
        m.at(i, i) = MultiPoly::variable(0, n);
        m.at(k + i, k + i) = MultiPoly::variable(0, n);
        m.at(k + i, 2 * k + i) = MultiPoly::variable(1, n);
        m.at(2 * k + i, i) = MultiPoly::variable(1, n);
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            m.at(i, 2 * k + j) = -x.at(i, j);
            m.at(2 * k + i, k + j) = x.at(i, j);
        }
    return m;
}

SpaceOfMatrices jplex(int key) {
    // Shared rows; only the second row differs below key 58.
    std::vector<std::vector<LF>> rows = {
        {{{0, 1}}, {}, {{1, 1}}, {{2, 1}}, {{4, 1}}},
        {},
        {{}, {}, {{0, 1}}, {}, {}},
        {{}, {}, {}, {{0, 1}}, {}},
        {{}, {}, {}, {{4, 1}}, {}},
    };
    switch (key) {
        case 58:
            rows[1] = {{{4, 1}}, {{0, 1}}, {{3, 1}}, {{1, -1}}, {}};
            rows[3] = {{}, {}, {{4, -1}}, {{0, 1}}, {}};
            break;
        case 57: rows[1] = {{}, {{0, 1}}, {{3, 1}}, {{1, -1}}, {}}; break;
        case 56: rows[1] = {{}, {{0, 1}, {4, 1}}, {}, {{3, 1}}, {}}; break;
        case 55: rows[1] = {{}, {{0, 1}}, {{4, 1}}, {{3, 1}}, {}}; break;
        case 54: rows[1] = {{}, {{0, 1}}, {}, {{3, 1}}, {}}; break;
        default: throw std::invalid_argument("jplex: key must be 54..58");
    }
    return from_rows(rows, 5);
}

SpaceOfMatrices pencil_block(PencilKind kind, int k, const Rat& lambda) {
    if (k < 1) throw std::invalid_argument("pencil_block: need k >= 1");
    switch (kind) {
        case PencilKind::L: {
            PolyMatrix m(2, k + 1, k);
            for (int j = 0; j < k; ++j) {
                m.at(0, j) = MultiPoly::variable(j, k);
                m.at(1, j + 1) = MultiPoly::variable(j, k);
            }
            return m;
        }
        case PencilKind::Lt: {
            PolyMatrix m(2, k, k + 1);
            for (int j = 0; j < k; ++j) {
                m.at(0, j) = MultiPoly::variable(j, k + 1);
                m.at(1, j) = MultiPoly::variable(j + 1, k + 1);
            }
            return m;
        }
        default: {
            PolyMatrix m(2, k, k);
            for (int j = 0; j < k; ++j) {
                m.at(0, j) = MultiPoly::variable(j, k);
                m.at(1, j) = MultiPoly::variable(j, k, lambda);
                if (j > 0) m.at(1, j) += MultiPoly::variable(j - 1, k);
            }
            return m;
        }
    }
}

namespace {

int pencil_nvars(PencilKind kind, int k) {
    return kind == PencilKind::Lt ? k + 1 : k;
}

// Re-embed a block into a larger shared variable space.
PolyMatrix shift_vars(const PolyMatrix& m, int offset, int total) {
    PolyMatrix out(m.rows(), m.cols(), total);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (const auto& [mono, c] : m.at(i, j).terms()) {
                Mono mm(total, 0);
                for (int v = 0; v < m.nvars(); ++v) mm[offset + v] = mono[v];
                out.at(i, j).add_term(mm, c);
            }
    return out;
}

}  // namespace

SpaceOfMatrices pencil_pair(PencilKind kind1, int k1, const Rat& lam1,
                            PencilKind kind2, int k2, const Rat& lam2) {
    int n1 = pencil_nvars(kind1, k1);
    int n2 = pencil_nvars(kind2, k2);
    PolyMatrix b1 = shift_vars(pencil_block(kind1, k1, lam1), 0, n1 + n2);
    PolyMatrix b2 = shift_vars(pencil_block(kind2, k2, lam2), n1, n1 + n2);
    PolyMatrix out(2, b1.cols() + b2.cols(), n1 + n2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < b1.cols(); ++j) out.at(i, j) = b1.at(i, j);
        for (int j = 0; j < b2.cols(); ++j) out.at(i, b1.cols() + j) = b2.at(i, j);
    }
    return out;
}

Tensor3 unit(int m) {
    if (m < 1) throw std::invalid_argument("unit: need m >= 1");
    Tensor3 t(m, m, m);
    for (int i = 0; i < m; ++i) t.set(i, i, i, Rat(1));
    return t;
}

Tensor3 wstate() {
    Tensor3 t(2, 2, 2);
    t.set(0, 0, 1, Rat(1));
    t.set(0, 1, 0, Rat(1));
    t.set(1, 0, 0, Rat(1));
    return t;
}

Tensor3 matmul(int n) {
    if (n < 1) throw std::invalid_argument("matmul: need n >= 1");
    Tensor3 t(n * n, n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t.set(n * i + j, n * j + k, n * k + i, Rat(1));
    return t;
}

Tensor3 skewcw2() {
    Tensor3 t(3, 3, 3);
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p)
        t.set(perm[p][0], perm[p][1], perm[p][2], Rat(p < 3 ? 1 : -1));
    return t;
}

namespace {

// Standard symplectic form on a 2k-dimensional space:
// omega(e_{2t}, e_{2t+1}) = 1 = -omega(e_{2t+1}, e_{2t}).
long omega(int i, int j) {
    if (i / 2 != j / 2) return 0;
    if (i + 1 == j && i % 2 == 0) return 1;
    if (j + 1 == i && j % 2 == 0) return -1;
    return 0;
}

}  // namespace

Tensor3 sextonion_general(int k) {
    if (k < 1) throw std::invalid_argument("sextonion_general: need k >= 1");
    int m = 2 * k;       // dim of each of U, V, W
    int dim = m * m + m; // A = U (x) V + W, cyclically
    Tensor3 t(dim, dim, dim);
    auto uv = [m](int i, int j) { return i * m + j; };
    auto vw = [m](int j, int l) { return j * m + l; };
    auto yuw = [m](int a, int b) { return a * m + b; };
    auto tail = [m](int l) { return m * m + l; };
    // (u x v) . (v' x w) pairs into U (x) W via the two symplectic forms.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) {
                    if (omega(j, p) == 0) continue;
                    for (int s = 0; s < m; ++s)
                        for (int r = 0; r < m; ++r) {
                            long c = omega(i, s) * omega(j, p) * omega(q, r);
                            if (c) t.add(uv(i, j), vw(p, q), yuw(s, r), make_rat(c));
                        }
                }
    // w . u lands in U (x) W.
    for (int l = 0; l < m; ++l)
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    long c = omega(i, a) * omega(l, b);
                    if (c) t.add(tail(l), tail(i), yuw(a, b), make_rat(c));
                }
    // w . (v x w') pairs into V.
    for (int l = 0; l < m; ++l)
        for (int j = 0; j < m; ++j)
            for (int q = 0; q < m; ++q)
                for (int p = 0; p < m; ++p) {
                    long c = omega(j, p) * omega(l, q);
                    if (c) t.add(tail(l), vw(j, q), tail(p), make_rat(c));
                }
    return t;
}

Tensor3 sextonion_algebra() {
    // Multiplication (X, mu) . (X', mu') = (X X', (tr(X) Id - X) mu' + X' mu)
    // on 2x2 matrices plus a 2-vector; basis e11, e12, e21, e22, f1, f2.
    Tensor3 t(6, 6, 6);
    auto E = [](int a, int b) { return 2 * a + b; };
    auto F = [](int m) { return 4 + m; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            for (int d = 0; d < 2; ++d) t.add(E(a, b), E(b, d), E(a, d), Rat(1));
            for (int m = 0; m < 2; ++m) {
                if (a == b) t.add(E(a, b), F(m), F(m), Rat(1));
                if (b == m) t.add(E(a, b), F(m), F(a), Rat(-1));
            }
        }
    for (int m = 0; m < 2; ++m)
        for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d)
                if (d == m) t.add(F(m), E(c, d), F(c), Rat(1));
    return t;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {"compression", "space", "k1 k2 b c", "maximal (k1,k2)-compression space in b x c"},
        {"skew", "space", "m (odd)", "general skew-symmetric m x m matrix"},
        {"koszul", "space", "a", "a x binom(a,2) wedge-multiplication space"},
        {"case1", "space", "", "skew(5): 5 x 5 of bounded rank 4"},
        {"case2", "space", "", "koszul(5): 5 x 10 of bounded rank 4"},
        {"case3", "space", "", "6 x 6 of bounded rank 4, first kind"},
        {"case4", "space", "", "6 x 6 of bounded rank 4, second kind"},
        {"c3_degenerate", "space", "", "3 x 3 space of the degenerate concise 3x3x3 tensor"},
        {"family_twoL1", "space", "b >= 5", "b x (2b-6) family of bounded rank b-2"},
        {"family_3k", "space", "k", "3k x 3k family of bounded rank 2k"},
        {"jplex_O54", "space", "", "concise 1-degenerate 5 x 5 space O54"},
        {"jplex_O55", "space", "", "concise 1-degenerate 5 x 5 space O55"},
        {"jplex_O56", "space", "", "concise 1-degenerate 5 x 5 space O56"},
        {"jplex_O57", "space", "", "concise 1-degenerate 5 x 5 space O57"},
        {"jplex_O58", "space", "", "concise 1-degenerate 5 x 5 space O58"},
        {"pencil_L", "space", "k", "pencil block L_k: 2 x (k+1)"},
        {"pencil_Lt", "space", "k", "pencil block L_k^t: 2 x k"},
        {"pencil_Jor", "space", "k lambda", "Jordan pencil block Jor_{k,lambda}: 2 x k"},
        {"skewcw2_anf", "space", "", "3 x 3 slice space of skewcw2 in blowup-ready coordinates"},
        {"unit", "tensor", "m", "unit (diagonal) tensor of size m"},
        {"wstate", "tensor", "", "W-state tangent tensor, 2 x 2 x 2"},
        {"matmul", "tensor", "n", "n x n matrix multiplication tensor"},
        {"skewcw2", "tensor", "", "alternating 3 x 3 x 3 tensor"},
        {"sextonion_general", "tensor", "k", "two-symplectic-pairings tensor, size 4k^2+2k"},
        {"sextonion_algebra", "tensor", "", "structure tensor of the sextonion algebra"},
    };
    return list;
}

Item build(const std::string& name, const std::vector<long>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("catalog: '" + name + "' takes " +
                                        std::to_string(n) + " parameter(s)");
    };
    Item item;
    auto sp = [&](SpaceOfMatrices s) {
        item.is_space = true;
        item.space = std::move(s);
        return item;
    };
    auto tn = [&](Tensor3 t) {
        item.is_space = false;
        item.tensor = std::move(t);
        return item;
    };
    auto p = [&](size_t i) { return static_cast<int>(params[i]); };

    if (name == "compression") { need(4); return sp(compression(p(0), p(1), p(2), p(3))); }
    if (name == "skew") { need(1); return sp(skew(p(0))); }
    if (name == "koszul") { need(1); return sp(koszul(p(0))); }
    if (name == "case1") { need(0); return sp(case1()); }
    if (name == "case2") { need(0); return sp(case2()); }
    if (name == "case3") { need(0); return sp(case3()); }
    if (name == "case4") { need(0); return sp(case4()); }
    if (name == "c3_degenerate") { need(0); return sp(c3_degenerate()); }
    if (name == "family_twoL1") { need(1); return sp(family_twoL1(p(0))); }
    if (name == "family_3k") { need(1); return sp(family_3k(p(0))); }
    if (name.rfind("jplex_O", 0) == 0 && name.size() == 9) {
        need(0);
        return sp(jplex(std::stoi(name.substr(7))));
    }
    if (name == "pencil_L") { need(1); return sp(pencil_block(PencilKind::L, p(0))); }
    if (name == "pencil_Lt") { need(1); return sp(pencil_block(PencilKind::Lt, p(0))); }
    if (name == "pencil_Jor") {
        need(2);
        return sp(pencil_block(PencilKind::Jor, p(0), make_rat(params[1])));
    }
    if (name == "skewcw2_anf") { need(0); return sp(skewcw2_normal_form()); }
    if (name == "unit") { need(1); return tn(unit(p(0))); }
    if (name == "wstate") { need(0); return tn(wstate()); }
    if (name == "matmul") { need(1); return tn(matmul(p(0))); }
    if (name == "skewcw2") { need(0); return tn(skewcw2()); }
    if (name == "sextonion_general") { need(1); return tn(sextonion_general(p(0))); }
    if (name == "sextonion_algebra") { need(0); return tn(sextonion_algebra()); }
    throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

}  // namespace brkit::catalog
