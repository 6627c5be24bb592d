#pragma once
#include <map>
#include <vector>

#include "wb/algebra.hpp"

namespace wb {

// Graded free module: generator j sits in internal degree twists[j].
struct FreeModule {
    std::vector<int> twists;
    int rank() const { return static_cast<int>(twists.size()); }
    int max_twist() const {
        int m = 0;
        for (int t : twists) m = std::max(m, t);
        return m;
    }
    int min_twist() const {
        if (twists.empty()) return 0;
        int m = twists[0];
        for (int t : twists) m = std::min(m, t);
        return m;
    }
    bool operator==(const FreeModule&) const = default;
};

// Layout of the degree-d graded piece of a free module: one block of
// algebra-basis coordinates per generator.
template <class F>
struct PieceLayout {
    int dim = 0;
    std::vector<int> offset;  // per generator; block j spans [offset[j], offset[j]+bdim[j])
    std::vector<int> bdim;    // dim A_{d - twist[j]}
    std::vector<int> gdeg;    // d - twist[j]
};

template <class F>
PieceLayout<F> piece_layout(const GradedAlgebra<F>& A, const FreeModule& M, int d) {
    PieceLayout<F> L;
    L.offset.resize(M.rank());
    L.bdim.resize(M.rank());
    L.gdeg.resize(M.rank());
    for (int j = 0; j < M.rank(); ++j) {
        int g = d - M.twists[j];
        L.offset[j] = L.dim;
        L.gdeg[j] = g;
        L.bdim[j] = A.dim(g);
        L.dim += L.bdim[j];
    }
    return L;
}

// Matrix of homogeneous algebra entries between graded free modules.
// Entry (i, j) has internal degree src.twists[j] - tgt.twists[i]; columns are
// kept sorted by row index and never store zeros.
template <class F>
class RModMatrix {
public:
    using Elem = typename F::Elem;
    struct ColEntry {
        int row;
        AlgebraElement<F> val;
    };

    RModMatrix() = default;
    RModMatrix(AlgebraPtr<F> A, FreeModule tgt, FreeModule src)
        : A_(std::move(A)), tgt_(std::move(tgt)), src_(std::move(src)),
          cols_(src_.rank()) {}

    const AlgebraPtr<F>& algebra() const { return A_; }
    const FreeModule& src() const { return src_; }
    const FreeModule& tgt() const { return tgt_; }
    const std::vector<ColEntry>& column(int j) const { return cols_[j]; }

    void set(int i, int j, AlgebraElement<F> a) {
        const auto& fld = A_->field();
        int want = src_.twists[j] - tgt_.twists[i];
        if (!a.c.empty() && a.deg != want)
            throw certificate_error("entry-degree-mismatch");
        auto& col = cols_[j];
        auto it = std::lower_bound(
            col.begin(), col.end(), i,
            [](const ColEntry& e, int r) { return e.row < r; });
        bool zero = a.is_zero(fld);
        if (it != col.end() && it->row == i) {
            if (zero)
                col.erase(it);
            else
                it->val = std::move(a);
        } else if (!zero) {
            col.insert(it, ColEntry{i, std::move(a)});
        }
    }

    const AlgebraElement<F>* get(int i, int j) const {
        const auto& col = cols_[j];
        auto it = std::lower_bound(
            col.begin(), col.end(), i,
            [](const ColEntry& e, int r) { return e.row < r; });
        if (it != col.end() && it->row == i) return &it->val;
        return nullptr;
    }

    bool is_zero() const {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }

    bool entries_equal(const RModMatrix& other) const {
        if (src_.rank() != other.src_.rank() || tgt_.rank() != other.tgt_.rank())
            return false;
        const auto& fld = A_->field();
        for (int j = 0; j < src_.rank(); ++j) {
            if (cols_[j].size() != other.cols_[j].size()) return false;
            for (std::size_t k = 0; k < cols_[j].size(); ++k) {
                const auto& a = cols_[j][k];
                const auto& b = other.cols_[j][k];
                if (a.row != b.row || a.val.c.size() != b.val.c.size()) return false;
                for (std::size_t t = 0; t < a.val.c.size(); ++t)
                    if (!fld.eq(a.val.c[t], b.val.c[t])) return false;
            }
        }
        return true;
    }

    // All entries in the maximal ideal (no unit parts).
    bool all_entries_positive_degree() const {
        for (const auto& col : cols_)
            for (const auto& e : col)
                if (e.val.deg == 0) return false;
        return true;
    }

    // this ∘ other
    RModMatrix mul(const RModMatrix& other) const {
        if (src_.twists != other.tgt_.twists)
            throw certificate_error("matrix-composition-mismatch");
        RModMatrix out(A_, tgt_, other.src_);
        for (int g = 0; g < other.src_.rank(); ++g) {
            std::map<int, AlgebraElement<F>> acc;
            for (const auto& bj : other.cols_[g]) {
                for (const auto& ai : cols_[bj.row]) {
                    auto prod = A_->mul(ai.val, bj.val);
                    if (prod.is_zero(A_->field())) continue;
                    auto it = acc.find(ai.row);
                    if (it == acc.end())
                        acc.emplace(ai.row, std::move(prod));
                    else
                        it->second = A_->add(it->second, prod);
                }
            }
            for (auto& [r, v] : acc)
                if (!v.is_zero(A_->field()))
                    out.cols_[g].push_back(ColEntry{r, std::move(v)});
        }
        return out;
    }

    // Hom(-, A): transposed entries, negated twists (plus an optional uniform
    // shift of the dual generators' degrees).
    RModMatrix block_dual(int shift = 0) const {
        FreeModule dsrc, dtgt;
        for (int t : tgt_.twists) dsrc.twists.push_back(-t + shift);
        for (int t : src_.twists) dtgt.twists.push_back(-t + shift);
        RModMatrix out(A_, dtgt, dsrc);
        for (int j = 0; j < src_.rank(); ++j)
            for (const auto& e : cols_[j]) out.set(j, e.row, e.val);
        return out;
    }

    // Scalar matrix of the degree-d piece.
    ScalarMatrix<F> scalar_matrix(int d) const {
        const auto& A = *A_;
        const auto& fld = A.field();
        auto Lt = piece_layout(A, tgt_, d);
        auto Ls = piece_layout(A, src_, d);
        ScalarMatrix<F> M(Lt.dim, Ls.dim);
        for (int j = 0; j < src_.rank(); ++j) {
            int cb = Ls.offset[j], cdim = Ls.bdim[j], cg = Ls.gdeg[j];
            if (cdim == 0) continue;
            for (const auto& e : cols_[j]) {
                int i = e.row;
                if (Lt.bdim[i] == 0) continue;
                int rb = Lt.offset[i];
                const auto& a = e.val;
                for (int b = 0; b < cdim; ++b)
                    for (int t = 0; t < static_cast<int>(a.c.size()); ++t) {
                        if (fld.is_zero(a.c[t])) continue;
                        for (const auto& [idx, v] : A.mul_basis(a.deg, t, cg, b))
                            M.add(fld, rb + idx, cb + b, fld.mul(a.c[t], v));
                    }
            }
        }
        return M;
    }

    // Apply to a degree-d piece vector of src.
    std::vector<Elem> apply(int d, const std::vector<Elem>& v) const {
        const auto& A = *A_;
        const auto& fld = A.field();
        auto Lt = piece_layout(A, tgt_, d);
        auto Ls = piece_layout(A, src_, d);
        std::vector<Elem> out(Lt.dim, fld.zero());
        for (int j = 0; j < src_.rank(); ++j) {
            int cb = Ls.offset[j], cdim = Ls.bdim[j], cg = Ls.gdeg[j];
            if (cdim == 0) continue;
            for (const auto& e : cols_[j]) {
                int i = e.row;
                if (Lt.bdim[i] == 0) continue;
                int rb = Lt.offset[i];
                const auto& a = e.val;
                for (int b = 0; b < cdim; ++b) {
                    if (fld.is_zero(v[cb + b])) continue;
                    for (int t = 0; t < static_cast<int>(a.c.size()); ++t) {
                        if (fld.is_zero(a.c[t])) continue;
                        Elem coef = fld.mul(a.c[t], v[cb + b]);
                        for (const auto& [idx, w] : A.mul_basis(a.deg, t, cg, b))
                            out[rb + idx] = fld.add(out[rb + idx], fld.mul(coef, w));
                    }
                }
            }
        }
        return out;
    }

    RModMatrix negated() const {
        RModMatrix out = *this;
        const auto& fld = A_->field();
        for (auto& col : out.cols_)
            for (auto& e : col)
                for (auto& c : e.val.c) c = fld.neg(c);
        return out;
    }

    RModMatrix minus(const RModMatrix& other) const {
        if (src_.twists != other.src_.twists || tgt_.twists != other.tgt_.twists)
            throw certificate_error("matrix-shape-mismatch");
        RModMatrix out = *this;
        const auto& fld = A_->field();
        for (int j = 0; j < src_.rank(); ++j)
            for (const auto& e : other.cols_[j]) {
                AlgebraElement<F> cur =
                    out.get(e.row, j) ? *out.get(e.row, j)
                                      : A_->zero_element(e.val.deg);
                for (std::size_t t = 0; t < cur.c.size(); ++t)
                    cur.c[t] = fld.sub(cur.c[t], e.val.c[t]);
                out.set(e.row, j, std::move(cur));
            }
        return out;
    }

private:
    AlgebraPtr<F> A_;
    FreeModule tgt_, src_;
    std::vector<std::vector<ColEntry>> cols_;
};

// Convert a degree-d piece vector into the algebra-entry column it represents.
template <class F>
std::vector<AlgebraElement<F>> piece_vector_to_entries(
    const GradedAlgebra<F>& A, const FreeModule& M, int d,
    const std::vector<typename F::Elem>& v) {
    auto L = piece_layout(A, M, d);
    std::vector<AlgebraElement<F>> out;
    out.reserve(M.rank());
    for (int j = 0; j < M.rank(); ++j) {
        AlgebraElement<F> a = A.zero_element(L.gdeg[j]);
        for (int b = 0; b < L.bdim[j]; ++b) a.c[b] = v[L.offset[j] + b];
        out.push_back(std::move(a));
    }
    return out;
}

// Multiply a degree-d piece vector of M by the variable x_var.
template <class F>
std::vector<typename F::Elem> piece_vector_var_mult(
    const GradedAlgebra<F>& A, const FreeModule& M, int d,
    const std::vector<typename F::Elem>& v, int var) {
    const auto& fld = A.field();
    int w = A.weights()[var];
    auto Ls = piece_layout(A, M, d);
    auto Lt = piece_layout(A, M, d + w);
    std::vector<typename F::Elem> out(Lt.dim, fld.zero());
    for (int j = 0; j < M.rank(); ++j) {
        if (Ls.bdim[j] == 0 || Lt.bdim[j] == 0) continue;
        const auto& X = A.var_mult(var, Ls.gdeg[j]);
        for (const auto& e : X.entries) {
            const auto& s = v[Ls.offset[j] + e.c];
            if (!fld.is_zero(s))
                out[Lt.offset[j] + e.r] =
                    fld.add(out[Lt.offset[j] + e.r], fld.mul(e.v, s));
        }
    }
    return out;
}

}  // namespace wb
