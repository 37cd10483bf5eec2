#include "brk/tensor.hpp"

#include <stdexcept>

namespace brkit {

Factor parse_factor(const std::string& s) {
    if (s == "A" || s == "a") return Factor::A;
    if (s == "B" || s == "b") return Factor::B;
    if (s == "C" || s == "c") return Factor::C;
    throw std::invalid_argument("factor must be A, B, or C");
}

std::string factor_name(Factor f) {
    switch (f) {
        case Factor::A: return "A";
        case Factor::B: return "B";
        default: return "C";
    }
}

void Tensor3::check(int i, int j, int k) const {
    if (i < 0 || i >= dims_[0] || j < 0 || j >= dims_[1] || k < 0 || k >= dims_[2])
        throw std::out_of_range("Tensor3: index out of range");
}

Rat Tensor3::at(int i, int j, int k) const {
    check(i, j, k);
    auto it = entries_.find({i, j, k});
    return it == entries_.end() ? Rat(0) : it->second;
}

void Tensor3::add(int i, int j, int k, const Rat& v) {
    check(i, j, k);
    if (brkit::is_zero(v)) return;
    auto [it, fresh] = entries_.emplace(std::array<int, 3>{i, j, k}, v);
    if (!fresh) {
        it->second += v;
        if (brkit::is_zero(it->second)) entries_.erase(it);
    }
}

void Tensor3::set(int i, int j, int k, const Rat& v) {
    check(i, j, k);
    entries_.erase({i, j, k});
    add(i, j, k, v);
}

SpaceOfMatrices slice_space(const Tensor3& t, Factor f) {
    int a = t.dim(0), b = t.dim(1), c = t.dim(2);
    int nv, rows, cols;
    switch (f) {
        case Factor::A: nv = a; rows = b; cols = c; break;
        case Factor::B: nv = b; rows = a; cols = c; break;
        default:        nv = c; rows = a; cols = b; break;
    }
    PolyMatrix m(rows, cols, nv);
    for (const auto& [ijk, val] : t.entries()) {
        auto [i, j, k] = ijk;
        switch (f) {
            case Factor::A: m.at(j, k) += MultiPoly::variable(i, nv, val); break;
            case Factor::B: m.at(i, k) += MultiPoly::variable(j, nv, val); break;
            default:        m.at(i, j) += MultiPoly::variable(k, nv, val); break;
        }
    }
    return m;
}

Tensor3 space_to_tensor(const SpaceOfMatrices& e) {
    if (!e.is_space_of_linear_forms())
        throw std::invalid_argument("space_to_tensor: entries must be linear forms");
    Tensor3 t(e.nvars(), e.rows(), e.cols());
    for (int j = 0; j < e.rows(); ++j)
        for (int k = 0; k < e.cols(); ++k)
            for (const auto& [m, coeff] : e.at(j, k).terms())
                for (int v = 0; v < e.nvars(); ++v)
                    if (m[v] == 1) t.add(v, j, k, coeff);
    return t;
}

std::vector<QMat> tensor_slices(const Tensor3& t, Factor f) {
    return slice_space(t, f).slices();
}

Tensor3 tensor_from_slices(const std::vector<QMat>& slices, Factor f) {
    PolyMatrix m = PolyMatrix::from_slices(slices);
    Tensor3 ta = space_to_tensor(m);
    if (f == Factor::A) return ta;
    // Move the variable axis back into position.
    int a = ta.dim(0), r = ta.dim(1), c = ta.dim(2);
    Tensor3 out = (f == Factor::B) ? Tensor3(r, a, c) : Tensor3(r, c, a);
    for (const auto& [ijk, val] : ta.entries()) {
        auto [v, i, j] = ijk;
        if (f == Factor::B)
            out.add(i, v, j, val);
        else
            out.add(i, j, v, val);
    }
    return out;
}

std::array<bool, 3> is_concise(const Tensor3& t) {
    std::array<bool, 3> out;
    for (int axis = 0; axis < 3; ++axis) {
        Factor f = static_cast<Factor>(axis);
        std::vector<QMat> sl = tensor_slices(t, f);
        std::vector<QVec> flat;
        for (const QMat& s : sl) {
            QVec v;
            for (const auto& row : s) v.insert(v.end(), row.begin(), row.end());
            flat.push_back(std::move(v));
        }
        out[axis] = span_dim(flat) == t.dim(axis);
    }
    return out;
}

Tensor3 kronecker(const Tensor3& t1, const Tensor3& t2) {
    int a2 = t2.dim(0), b2 = t2.dim(1), c2 = t2.dim(2);
    Tensor3 out(t1.dim(0) * a2, t1.dim(1) * b2, t1.dim(2) * c2);
    for (const auto& [x, v1] : t1.entries())
        for (const auto& [y, v2] : t2.entries())
            out.add(x[0] * a2 + y[0], x[1] * b2 + y[1], x[2] * c2 + y[2], v1 * v2);
    return out;
}

Tensor3 base_change(const Tensor3& t, const QMat& ga, const QMat& gb, const QMat& gc) {
    if (static_cast<int>(ga.size()) != t.dim(0) ||
        static_cast<int>(gb.size()) != t.dim(1) ||
        static_cast<int>(gc.size()) != t.dim(2))
        throw std::invalid_argument("base_change: matrix size mismatch");
    qmat_inverse(ga);
    qmat_inverse(gb);
    qmat_inverse(gc);  // singularity check only
    Tensor3 out(t.dim(0), t.dim(1), t.dim(2));
    for (const auto& [ijk, val] : t.entries()) {
        auto [i, j, k] = ijk;
        for (int p = 0; p < t.dim(0); ++p) {
            if (brkit::is_zero(ga[p][i])) continue;
            for (int q = 0; q < t.dim(1); ++q) {
                if (brkit::is_zero(gb[q][j])) continue;
                for (int r = 0; r < t.dim(2); ++r)
                    out.add(p, q, r, ga[p][i] * gb[q][j] * gc[r][k] * val);
            }
        }
    }
    return out;
}

}  // namespace brkit
