#include "brk/criticality.hpp"

#include <stdexcept>

#include "brk/rng.hpp"

namespace brkit {

RndResult rnd_space(const SpaceOfMatrices& e, std::uint64_t seed, int max_samples) {
    int n = e.nvars(), p = e.rows(), q = e.cols();
    Rng rng(seed);
    int r = 0;
    {
        int cap = std::min(p, q);
        for (int s = 0; s < 30 && r < cap; ++s)
            r = std::max(r, rank_at(e, rng.point(n)));
    }
    RndResult out;
    QMat conds;
    int stable = 0;
    for (int s = 0; s < max_samples; ++s) {
        QMat y;
        int guard = 0;
        while (true) {
            y = e.eval(rng.point(n));
            if (qmat_rank(y) == r) break;
            if (++guard > 500)
                throw std::runtime_error("rnd_space: cannot sample a maximal-rank member");
        }
        std::vector<QVec> right = qmat_nullspace(y, q);
        std::vector<QVec> left = qmat_nullspace(qmat_transpose(y), p);
        for (const QVec& lv : left)
            for (const QVec& kv : right) {
                QVec row(static_cast<size_t>(p) * q, Rat(0));
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < q; ++j) row[i * q + j] = lv[i] * kv[j];
                conds.push_back(std::move(row));
            }
        long d = static_cast<long>(p) * q - qmat_rank(conds);
        out.dim_history.push_back(d);
        out.samples_used = s + 1;
        size_t h = out.dim_history.size();
        if (h >= 2 && out.dim_history[h - 1] == out.dim_history[h - 2]) {
            if (++stable >= 3) break;
        } else {
            stable = 0;
        }
    }
    out.dim_intersection = out.dim_history.back();

    std::vector<QVec> basis = qmat_nullspace(conds, p * q);
    std::vector<QVec> flat;
    for (const QMat& s : e.slices()) {
        QVec v;
        v.reserve(static_cast<size_t>(p) * q);
        for (const auto& row : s)
            for (const Rat& x : row) v.push_back(x);
        flat.push_back(std::move(v));
    }
    out.dim_space = span_dim(flat);
    std::vector<QVec> unions = basis;
    unions.insert(unions.end(), flat.begin(), flat.end());
    out.contained = !basis.empty() && span_dim(unions) == span_dim(basis);
    out.certified = out.contained && out.dim_intersection == out.dim_space;
    return out;
}

}  // namespace brkit
