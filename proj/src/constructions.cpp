#include "brk/constructions.hpp"

#include <stdexcept>

#include "brk/rng.hpp"

namespace brkit {

CommutingFamily::CommutingFamily(std::vector<PolyMatrix> mats) : mats_(std::move(mats)) {
    if (mats_.empty()) throw std::invalid_argument("CommutingFamily: empty list");
    int k = mats_[0].rows(), n = mats_[0].nvars();
    for (const PolyMatrix& m : mats_)
        if (m.rows() != k || m.cols() != k || m.nvars() != n)
            throw std::invalid_argument("CommutingFamily: shapes disagree");
    for (size_t i = 0; i < mats_.size(); ++i)
        for (size_t j = i + 1; j < mats_.size(); ++j)
            if (!(mats_[i] * mats_[j] == mats_[j] * mats_[i]))
                throw std::invalid_argument("CommutingFamily: matrices do not commute");
}

CommutingFamily family_from_constants(const std::vector<QMat>& cs) {
    int n = static_cast<int>(cs.size());
    std::vector<PolyMatrix> mats;
    for (int v = 0; v < n; ++v) {
        int k = static_cast<int>(cs[v].size());
        PolyMatrix m(k, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (!is_zero(cs[v][i][j]))
                    m.at(i, j) = MultiPoly::variable(v, n, cs[v][i][j]);
        mats.push_back(std::move(m));
    }
    return CommutingFamily(std::move(mats));
}

CommutingFamily random_commuting_family(int nslices, std::uint64_t seed, int k) {
    if (nslices < 1 || k < 1) throw std::invalid_argument("random_commuting_family: bad sizes");
    Rng rng(seed);
    QMat z(k, QVec(k));
    for (auto& row : z)
        for (Rat& x : row) x = Rat(rng.range(-3, 3));
    // Powers of one matrix commute; so do polynomials in it.
    std::vector<QMat> cs;
    for (int i = 0; i < nslices; ++i) {
        QMat g = qmat_zero(k, k), zp = qmat_identity(k);
        for (int d = 0; d <= 2; ++d) {
            Rat c = Rat(rng.range(-3, 3));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) g[a][b] += c * zp[a][b];
            zp = qmat_mul(zp, z);
        }
        cs.push_back(std::move(g));
    }
    return family_from_constants(cs);
}

SpaceOfMatrices blowup(const SpaceOfMatrices& e, const CommutingFamily& fam) {
    if (fam.size() != e.nvars())
        throw std::invalid_argument("blowup: family size must match the slice count");
    int k = fam.k(), p = e.rows(), q = e.cols();
    PolyMatrix out(p * k, q * k, fam.nvars());
    std::vector<QMat> slices = e.slices();
    for (int v = 0; v < e.nvars(); ++v)
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                const Rat& s = slices[v][i][j];
                if (is_zero(s)) continue;
                for (int ii = 0; ii < k; ++ii)
                    for (int jj = 0; jj < k; ++jj)
                        out.at(i * k + ii, j * k + jj) += fam[v].at(ii, jj) * s;
            }
    return out;
}

SpaceOfMatrices skewcw2_normal_form() {
    PolyMatrix m(3, 3, 3);
    m.at(0, 0) = MultiPoly::variable(0, 3);
    m.at(0, 2) = MultiPoly::variable(2, 3, Rat(-1));
    m.at(1, 1) = MultiPoly::variable(0, 3);
    m.at(1, 2) = MultiPoly::variable(1, 3);
    m.at(2, 0) = MultiPoly::variable(1, 3);
    m.at(2, 1) = MultiPoly::variable(2, 3);
    return m;
}

namespace {

PolyMatrix from_entries(int k, int n, const std::vector<std::vector<int>>& vars) {
    // vars[i][j] is a 1-based variable index, 0 for a zero entry.
    PolyMatrix m(k, k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (vars[i][j]) m.at(i, j) = MultiPoly::variable(vars[i][j] - 1, n);
    return m;
}

}  // namespace

CommutingFamily family_a() {
    return CommutingFamily({from_entries(2, 6, {{1, 0}, {0, 1}}),
                            from_entries(2, 6, {{2, 0}, {0, 2}}),
                            from_entries(2, 6, {{3, 5}, {4, 6}})});
}

CommutingFamily family_b() {
    return CommutingFamily({from_entries(2, 6, {{1, 2}, {0, 1}}),
                            from_entries(2, 6, {{3, 4}, {0, 3}}),
                            from_entries(2, 6, {{5, 6}, {0, 5}})});
}

KronBoundedReport kron_bounded_report(const Tensor3& t, const Tensor3& t2) {
    KronBoundedReport out;
    SpaceOfMatrices factor = slice_space(t, Factor::A);
    out.factor_rank = exact_rank(factor);
    out.other_dim = t2.dim(0);
    out.bound = static_cast<long>(out.factor_rank) * out.other_dim;
    SpaceOfMatrices product = slice_space(kronecker(t, t2), Factor::A);
    out.rows = product.rows();
    out.cols = product.cols();
    out.rank = exact_rank(product);
    out.tight = out.rank == out.bound;
    return out;
}

}  // namespace brkit
