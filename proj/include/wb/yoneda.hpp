#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wb/cohomology.hpp"

namespace wb {

// Uniform view of a resolution (spots 0..N) or a complete resolution window
// (spots lo..hi); d(t): T_t -> T_{t-1} for lo < t <= hi.
template <class F>
struct ComplexView {
    AlgebraPtr<F> A;
    int lo = 0, hi = 0;
    const Resolution<F>* res = nullptr;
    const CompleteResolution<F>* cres = nullptr;

    static ComplexView of(const Resolution<F>& r) {
        ComplexView v;
        v.A = r.A;
        v.lo = 0;
        v.hi = r.length();
        v.res = &r;
        return v;
    }
    static ComplexView of(const CompleteResolution<F>& c) {
        ComplexView v;
        v.A = c.A;
        v.lo = c.lo;
        v.hi = c.hi;
        v.cres = &c;
        return v;
    }

    const FreeModule& mod(int t) const {
        if (t < lo || t > hi) throw precondition_error("window-insufficient");
        return res ? res->mod(t) : cres->mod(t);
    }
    const RModMatrix<F>& d(int t) const {
        if (t <= lo || t > hi) throw precondition_error("window-insufficient");
        return res ? res->d(t) : cres->d(t);
    }
};

// Homogeneous cohomology class: a functional on the generators of T_n,
// supported on generators of one internal degree.
template <class F>
struct CohomologyClass {
    using Elem = typename F::Elem;
    int n = 0;             // cohomological degree
    int internal_deg = 0;  // twist of the supporting generators
    std::vector<Elem> coeffs;

    bool is_zero(const F& fld) const {
        for (const auto& c : coeffs)
            if (!fld.is_zero(c)) return false;
        return true;
    }
    bool equals(const F& fld, const CohomologyClass& o) const {
        if (n != o.n) return false;
        bool za = is_zero(fld), zb = o.is_zero(fld);
        if (za || zb) return za && zb;
        if (internal_deg != o.internal_deg || coeffs.size() != o.coeffs.size())
            return false;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!fld.eq(coeffs[i], o.coeffs[i])) return false;
        return true;
    }
};

template <class F>
CohomologyClass<F> generator_dual_class(const ComplexView<F>& C, int n, int j) {
    CohomologyClass<F> c;
    c.n = n;
    c.internal_deg = C.mod(n).twists[j];
    c.coeffs.assign(C.mod(n).rank(), C.A->field().zero());
    c.coeffs[j] = C.A->field().one();
    return c;
}

template <class F>
CohomologyClass<F> zero_class(const ComplexView<F>& C, int n, int internal_deg) {
    CohomologyClass<F> c;
    c.n = n;
    c.internal_deg = internal_deg;
    c.coeffs.assign(C.mod(n).rank(), C.A->field().zero());
    return c;
}

// Chain map of cohomological degree h and internal degree w: components
// comp[s]: T_s -> T_{s-h} with the target twists shifted by w, so every
// component is a degree-zero graded matrix.
template <class F>
struct ChainMap {
    int h = 0;
    int internal_deg = 0;
    std::map<int, RModMatrix<F>> comp;  // keyed by source spot
};

namespace detail {

inline FreeModule shifted(const FreeModule& m, int s) {
    FreeModule out = m;
    for (int& t : out.twists) t += s;
    return out;
}

template <class F>
RModMatrix<F> shift_matrix(const RModMatrix<F>& m, int s) {
    RModMatrix<F> out(m.algebra(), shifted(m.tgt(), s), shifted(m.src(), s));
    for (int j = 0; j < m.src().rank(); ++j)
        for (const auto& e : m.column(j)) out.set(e.row, j, e.val);
    return out;
}

// Column j of M as a piece vector of tgt at the column's internal degree.
template <class F>
std::vector<typename F::Elem> column_piece_vector(const RModMatrix<F>& M, int j) {
    const auto& A = *M.algebra();
    int deg = M.src().twists[j];
    auto L = piece_layout(A, M.tgt(), deg);
    std::vector<typename F::Elem> v(L.dim, A.field().zero());
    for (const auto& e : M.column(j)) {
        if (L.bdim[e.row] == 0) continue;
        for (int b = 0; b < static_cast<int>(e.val.c.size()); ++b)
            v[L.offset[e.row] + b] = e.val.c[b];
    }
    return v;
}

}  // namespace detail

// Lifts classes to chain maps and extends components up and down the window.
// Prepared per-(spot,degree) factorizations are cached across calls.
template <class F>
class LiftEngine {
public:
    using Elem = typename F::Elem;

    explicit LiftEngine(ComplexView<F> C) : C_(std::move(C)) {}

    const ComplexView<F>& view() const { return C_; }

    // comp[n] = the scalar embedding T_n -> T_0(w) of the class functional.
    RModMatrix<F> base_component(const CohomologyClass<F>& cls) const {
        const auto& A = *C_.A;
        const auto& fld = A.field();
        if (C_.mod(0).rank() != 1 || C_.mod(0).twists[0] != 0)
            throw precondition_error("lift-base-not-cyclic");
        RModMatrix<F> m(C_.A, detail::shifted(C_.mod(0), cls.internal_deg),
                        C_.mod(cls.n));
        for (int j = 0; j < C_.mod(cls.n).rank(); ++j) {
            if (fld.is_zero(cls.coeffs[j])) continue;
            if (C_.mod(cls.n).twists[j] != cls.internal_deg)
                throw precondition_error("class-not-homogeneous");
            AlgebraElement<F> a = A.zero_element(0);
            a.c[0] = cls.coeffs[j];
            m.set(0, j, std::move(a));
        }
        return m;
    }

    ChainMap<F> lift(const CohomologyClass<F>& cls, int src_lo, int src_hi,
                     bool alt = false) {
        ChainMap<F> k;
        k.h = cls.n;
        k.internal_deg = cls.internal_deg;
        k.comp.emplace(cls.n, base_component(cls));
        extend(k, src_lo, src_hi, alt);
        return k;
    }

    // Extend an existing chain map so comp[s] exists for all s in
    // [src_lo, src_hi] (clamped to what the window allows).
    void extend(ChainMap<F>& k, int src_lo, int src_hi, bool alt = false) {
        while (k.comp.rbegin()->first < src_hi) extend_up(k, alt);
        while (k.comp.begin()->first > src_lo) extend_down(k, alt);
    }

private:
    // d'_{s+1-h} comp[s+1] = (-1)^h comp[s] d_{s+1}, solved per column.
    void extend_up(ChainMap<F>& k, bool alt) {
        int s = k.comp.rbegin()->first;
        const auto& A = *C_.A;
        const auto& fld = A.field();
        int h = k.h, w = k.internal_deg;
        if (s + 1 > C_.hi || s + 1 - h > C_.hi || s + 1 - h <= C_.lo)
            throw precondition_error("window-insufficient");
        auto rhs = k.comp.at(s).mul(C_.d(s + 1));
        if (h % 2 != 0) rhs = rhs.negated();
        const auto& dsolve = C_.d(s + 1 - h);
        RModMatrix<F> next(C_.A, detail::shifted(C_.mod(s + 1 - h), w),
                           C_.mod(s + 1));
        for (int g = 0; g < C_.mod(s + 1).rank(); ++g) {
            int deg = C_.mod(s + 1).twists[g] - w;  // unshifted internal degree
            auto b = detail::column_piece_vector(rhs, g);
            auto& ps = solver(s + 1 - h, deg, alt);
            auto x = ps.solve(b);
            if (!x) throw precondition_error("lift-inconsistent");
            auto col = piece_vector_to_entries(A, C_.mod(s + 1 - h), deg, *x);
            for (int i = 0; i < C_.mod(s + 1 - h).rank(); ++i)
                if (!col[i].is_zero(fld)) next.set(i, g, col[i]);
        }
        k.comp.emplace(s + 1, std::move(next));
    }

    // comp[s-1] d_s = (-1)^h d'_{s-h} comp[s], solved in entry-coefficient
    // space (the unknown must be an R-linear matrix, so the graded pieces
    // cannot be solved independently).
    void extend_down(ChainMap<F>& k, bool alt) {
        int s = k.comp.begin()->first;
        const auto& A = *C_.A;
        const auto& fld = A.field();
        int h = k.h, w = k.internal_deg;
        if (s - 1 < C_.lo || s - h <= C_.lo || s - h > C_.hi)
            throw precondition_error("window-insufficient");
        auto rhs = detail::shift_matrix(C_.d(s - h), w).mul(k.comp.at(s));
        if (h % 2 != 0) rhs = rhs.negated();

        const FreeModule& src = C_.mod(s - 1);
        FreeModule tgt = detail::shifted(C_.mod(s - 1 - h), w);

        // unknown slots: (i, j, basis index) with entry degree >= 0
        struct Slot {
            int i, j, deg, b;
        };
        std::vector<Slot> slots;
        for (int j = 0; j < src.rank(); ++j)
            for (int i = 0; i < tgt.rank(); ++i) {
                int deg = src.twists[j] - tgt.twists[i];
                for (int b = 0; b < A.dim(deg); ++b) slots.push_back({i, j, deg, b});
            }

        // equations: entries of X d_s per (row i, col g, basis of A)
        const auto& ds = C_.d(s);
        std::map<std::tuple<int, int, int>, int> eq_index;
        auto eq_of = [&](int i, int g, int bidx) {
            auto key = std::make_tuple(i, g, bidx);
            auto it = eq_index.find(key);
            if (it != eq_index.end()) return it->second;
            int idx = static_cast<int>(eq_index.size());
            eq_index.emplace(key, idx);
            return idx;
        };
        // build sparse columns of the operator
        std::vector<std::vector<std::pair<int, Elem>>> op_cols(slots.size());
        for (std::size_t t = 0; t < slots.size(); ++t) {
            const auto& sl = slots[t];
            // unit entry at (sl.i, sl.j): basis element b of A_deg
            for (int g = 0; g < ds.src().rank(); ++g) {
                const auto* dval = ds.get(sl.j, g);
                if (!dval) continue;
                auto prod = A.mul(A.basis_element(sl.deg, sl.b), *dval);
                for (int bb = 0; bb < static_cast<int>(prod.c.size()); ++bb)
                    if (!fld.is_zero(prod.c[bb]))
                        op_cols[t].emplace_back(eq_of(sl.i, g, bb), prod.c[bb]);
            }
        }
        // rhs entries into the same equation space
        std::map<int, Elem> rhs_vec;
        for (int g = 0; g < rhs.src().rank(); ++g)
            for (const auto& e : rhs.column(g))
                for (int bb = 0; bb < static_cast<int>(e.val.c.size()); ++bb)
                    if (!fld.is_zero(e.val.c[bb]))
                        rhs_vec[eq_of(e.row, g, bb)] = e.val.c[bb];

        int neq = static_cast<int>(eq_index.size());
        ScalarMatrix<F> M(neq, static_cast<int>(slots.size()));
        for (std::size_t t = 0; t < slots.size(); ++t)
            for (const auto& [r, v] : op_cols[t])
                M.add(fld, r, static_cast<int>(t), v);
        std::vector<Elem> b(neq, fld.zero());
        for (const auto& [r, v] : rhs_vec) b[r] = v;
        auto x = solve(fld, M, b, alt ? ColOrder::reverse : ColOrder::forward);
        if (!x) throw precondition_error("lift-inconsistent");

        RModMatrix<F> prev(C_.A, tgt, src);
        std::map<std::pair<int, int>, AlgebraElement<F>> acc;
        for (std::size_t t = 0; t < slots.size(); ++t) {
            const auto& sl = slots[t];
            if (fld.is_zero((*x)[t])) continue;
            auto key = std::make_pair(sl.i, sl.j);
            auto it = acc.find(key);
            if (it == acc.end()) it = acc.emplace(key, A.zero_element(sl.deg)).first;
            it->second.c[sl.b] = fld.add(it->second.c[sl.b], (*x)[t]);
        }
        for (auto& [key, val] : acc)
            if (!val.is_zero(fld)) prev.set(key.first, key.second, std::move(val));
        k.comp.emplace(s - 1, std::move(prev));
    }

    PreparedSolver<F>& solver(int t, int deg, bool alt) {
        auto key = std::make_tuple(t, deg, alt);
        auto it = solvers_.find(key);
        if (it != solvers_.end()) return it->second;
        auto M = C_.d(t).scalar_matrix(deg);
        return solvers_
            .emplace(key, PreparedSolver<F>(C_.A->field(), M,
                                            alt ? ColOrder::reverse
                                                : ColOrder::forward))
            .first->second;
    }

    ComplexView<F> C_;
    std::map<std::tuple<int, int, bool>, PreparedSolver<F>> solvers_;
};

// Product a.b of cohomology classes via composed lifts: only the factor b is
// lifted; the result functional on T_{|a|+|b|} pairs the unit parts of
// comp_b[|a|+|b|] against the coefficients of a.  Lift independence is
// certified by recomputation with the alternate solver unless certify=false.
template <class F>
CohomologyClass<F> product_class(LiftEngine<F>& eng,
                                 const CohomologyClass<F>& a,
                                 const CohomologyClass<F>& b,
                                 bool certify = true) {
    const auto& C = eng.view();
    const auto& fld = C.A->field();
    int n = a.n + b.n;
    int w = a.internal_deg + b.internal_deg;
    auto out = zero_class(C, n, w);
    if (a.is_zero(fld) || b.is_zero(fld)) return out;

    // internal-degree vanishing: no generator of T_n in degree w
    bool twist_match = false;
    for (int t : C.mod(n).twists) twist_match |= (t == w);
    if (!twist_match) return out;

    auto evaluate = [&](bool alt) {
        auto res = zero_class(C, n, w);
        auto kb = eng.lift(b, std::min(b.n, n), std::max(b.n, n), alt);
        const auto& comp = kb.comp.at(n);  // T_n -> T_{a.n}(b.internal)
        for (int g = 0; g < C.mod(n).rank(); ++g) {
            if (C.mod(n).twists[g] != w) continue;
            typename F::Elem acc = fld.zero();
            for (const auto& e : comp.column(g)) {
                if (fld.is_zero(a.coeffs[e.row])) continue;
                if (C.mod(a.n).twists[e.row] != a.internal_deg) continue;
                if (e.val.deg == 0)
                    acc = fld.add(acc, fld.mul(a.coeffs[e.row], e.val.c[0]));
            }
            res.coeffs[g] = acc;
        }
        return res;
    };
    out = evaluate(false);
    if (certify) {
        auto out2 = evaluate(true);
        if (!out.equals(fld, out2))
            throw certificate_error("lift-dependence",
                                    "product differs across lift choices");
    }
    return out;
}

// Yoneda product on absolute cohomology (resolution view, degrees >= 0).
template <class F>
CohomologyClass<F> compose_classes(LiftEngine<F>& eng,
                                   const CohomologyClass<F>& a,
                                   const CohomologyClass<F>& b,
                                   bool certify = true) {
    if (a.n < 0 || b.n < 0) throw precondition_error("absolute-degrees-negative");
    if (a.n + b.n > eng.view().hi)
        throw precondition_error("window-insufficient");
    return product_class(eng, a, b, certify);
}

// Composition product on stable cohomology (complete-resolution view).
template <class F>
CohomologyClass<F> stable_product(LiftEngine<F>& eng,
                                  const CohomologyClass<F>& a,
                                  const CohomologyClass<F>& b,
                                  bool certify = true) {
    const auto& C = eng.view();
    int n = a.n + b.n;
    if (n < C.lo + 1 || n > C.hi || b.n < C.lo || b.n > C.hi)
        throw precondition_error("window-insufficient");
    return product_class(eng, a, b, certify);
}

template <class F>
CohomologyClass<F> class_scale(const F& fld, const CohomologyClass<F>& a,
                               const typename F::Elem& s) {
    CohomologyClass<F> out = a;
    for (auto& c : out.coeffs) c = fld.mul(c, s);
    return out;
}

template <class F>
CohomologyClass<F> class_add(const F& fld, const CohomologyClass<F>& a,
                             const CohomologyClass<F>& b) {
    if (a.n != b.n || a.coeffs.size() != b.coeffs.size())
        throw precondition_error("class-add-mismatch");
    if (a.is_zero(fld)) return b;
    if (b.is_zero(fld)) return a;
    if (a.internal_deg != b.internal_deg)
        throw precondition_error("class-add-mismatch", "internal degrees");
    CohomologyClass<F> out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = fld.add(out.coeffs[i], b.coeffs[i]);
    return out;
}

// Map from absolute to stable classes: T_n = F_n on the positive side.
template <class F>
CohomologyClass<F> iota(const ComplexView<F>& stable_view,
                        const CohomologyClass<F>& c) {
    if (c.n < 0) throw precondition_error("iota-negative-degree");
    if (stable_view.mod(c.n).rank() != static_cast<int>(c.coeffs.size()))
        throw precondition_error("iota-rank-mismatch");
    return c;
}

}  // namespace wb
