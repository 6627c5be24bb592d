#pragma once
#include <climits>
#include <functional>
#include <map>
#include <vector>

#include "wb/module.hpp"

namespace wb {

// Chain of graded free modules F_0..F_N with differentials d(n): F_n -> F_{n-1}.
// For minimal resolutions built here, exactness at F_0..F_{N-1} is certified
// during construction: the rank of each new differential is checked per
// internal degree against the kernel dimensions of the previous one.
template <class F>
struct Resolution {
    AlgebraPtr<F> A;
    std::vector<FreeModule> mods;       // F_0..F_N
    std::vector<RModMatrix<F>> diffs;   // diffs[n-1] = d_n
    bool minimal = true;
    int valid_to = INT_MAX;             // last trusted homological degree
    // per-degree bookkeeping of d_n: dim ker and rank of every graded piece
    std::vector<std::map<int, int>> ker_dims;   // index n-1
    std::vector<std::map<int, int>> rank_dims;  // index n-1

    int length() const { return static_cast<int>(mods.size()) - 1; }
    const FreeModule& mod(int n) const { return mods.at(n); }
    const RModMatrix<F>& d(int n) const { return diffs.at(n - 1); }

    std::vector<int> betti() const {
        std::vector<int> b;
        for (const auto& m : mods) b.push_back(m.rank());
        return b;
    }

    void require_degree(int n) const {
        if (n > valid_to)
            throw precondition_error(
                "truncation-exceeded",
                "homological degree " + std::to_string(n) +
                    " beyond trusted window " + std::to_string(valid_to));
    }
};

// Standard presentation of the residue field: F_1 = (+) A(-w_i) --[x_i]--> A.
template <class F>
RModMatrix<F> residue_field_presentation(const AlgebraPtr<F>& A) {
    FreeModule f0{{0}};
    FreeModule f1;
    const auto& P = A->presentation();
    for (int i = 0; i < P.num_vars; ++i) f1.twists.push_back(P.weights[i]);
    RModMatrix<F> d1(A, f0, f1);
    for (int i = 0; i < P.num_vars; ++i) {
        Poly<F> xi;
        xi.add_term(P.fld, mono_var(P.num_vars, i), P.fld.one());
        d1.set(0, i, A->element_from_poly(xi));
    }
    return d1;
}

namespace detail {

// Internal degree range over which graded pieces of M can be non-zero.
template <class F>
std::pair<int, int> piece_degree_range(const GradedAlgebra<F>& A,
                                       const FreeModule& M) {
    if (M.rank() == 0) return {0, -1};
    int lo = M.min_twist();
    // Artinian: every piece is finite and complete.  Truncated algebras:
    // pieces are complete only while every generator block stays below the
    // truncation, which holds up to internal degree D + min twist; degrees
    // beyond D are never needed inside the trusted window.
    int hi = A.artinian() ? M.max_twist() + *A.top_degree()
                          : std::min(A.truncation() + M.min_twist(),
                                     M.max_twist() + A.truncation());
    return {lo, hi};
}

}  // namespace detail

// One syzygy step: kernel of `d` per internal degree, minimal generators of
// the kernel (completing the span of m*ker against each graded piece), and
// the next differential assembled from those generators.
//
// prev_ker_dims, when given, is used to certify exactness of the previous
// spot: rank(d)_deg must equal dim ker(previous d)_deg.
template <class F>
RModMatrix<F> syzygy_step(const RModMatrix<F>& d,
                          std::map<int, int>* out_ker_dims,
                          std::map<int, int>* out_rank_dims,
                          const std::map<int, int>* prev_ker_dims,
                          bool check_augmentation_spot = false,
                          int prev_deg_cap = INT_MAX) {
    const auto& A = *d.algebra();
    const auto& fld = A.field();
    const FreeModule& src = d.src();
    auto [dlo, dhi] = detail::piece_degree_range(A, src);
    if (!A.artinian())
        dhi = std::min(dhi, A.truncation() +
                                std::min(src.min_twist(), d.tgt().min_twist()));

    struct DegData {
        std::vector<int> free_cols;
        std::vector<std::vector<typename F::Elem>> kernel;
    };
    std::map<int, DegData> kernels;
    std::vector<std::pair<int, std::vector<typename F::Elem>>> new_gens;

    const auto& weights = A.weights();
    for (int deg = dlo; deg <= dhi; ++deg) {
        auto Ls = piece_layout(A, src, deg);
        if (Ls.dim == 0) continue;
        auto M = d.scalar_matrix(deg);
        auto rr = rref(fld, M);
        if (out_ker_dims) (*out_ker_dims)[deg] = static_cast<int>(rr.kernel.size());
        if (out_rank_dims) (*out_rank_dims)[deg] = rr.rank;
        if (prev_ker_dims && deg <= prev_deg_cap) {
            auto it = prev_ker_dims->find(deg);
            int expect = it == prev_ker_dims->end() ? 0 : it->second;
            if (rr.rank != expect)
                throw certificate_error("exactness-failure",
                                        "rank mismatch at internal degree " +
                                            std::to_string(deg));
        }
        if (check_augmentation_spot) {
            // image of d_1 must be the whole maximal ideal, piece by piece
            int expect = deg >= 1 ? A.dim(deg) : 0;
            if (rr.rank != expect)
                throw certificate_error("exactness-failure",
                                        "augmentation spot at degree " +
                                            std::to_string(deg));
        }

        int kdim = static_cast<int>(rr.kernel.size());
        IncrementalRank<F> inc(fld, kdim);
        if (kdim > 0) {
            // span of x_i * (kernel at lower degree), in kernel coordinates
            for (std::size_t vi = 0; vi < weights.size(); ++vi) {
                auto kit = kernels.find(deg - weights[vi]);
                if (kit == kernels.end()) continue;
                for (const auto& kv : kit->second.kernel) {
                    auto prod = piece_vector_var_mult(A, src, deg - weights[vi],
                                                      kv, static_cast<int>(vi));
                    std::vector<typename F::Elem> coords(kdim);
                    for (int t = 0; t < kdim; ++t)
                        coords[t] = prod[rr.free_cols[t]];
                    inc.add(std::move(coords));
                }
            }
            for (int t = 0; t < kdim; ++t) {
                std::vector<typename F::Elem> unit(kdim, fld.zero());
                unit[t] = fld.one();
                if (inc.add(std::move(unit)))
                    new_gens.emplace_back(deg, rr.kernel[t]);
            }
        }
        DegData dd;
        dd.free_cols = rr.free_cols;
        dd.kernel = std::move(rr.kernel);
        kernels.emplace(deg, std::move(dd));
        // only the last max-weight degrees are needed for the m*ker span
        int maxw = *std::max_element(weights.begin(), weights.end());
        for (auto it = kernels.begin(); it != kernels.end();)
            if (it->first < deg - maxw + 1)
                it = kernels.erase(it);
            else
                ++it;
    }

    FreeModule next;
    for (const auto& [deg, v] : new_gens) next.twists.push_back(deg);
    RModMatrix<F> dn(d.algebra(), src, next);
    for (std::size_t g = 0; g < new_gens.size(); ++g) {
        auto col = piece_vector_to_entries(A, src, new_gens[g].first,
                                           new_gens[g].second);
        for (int i = 0; i < src.rank(); ++i)
            if (!col[i].is_zero(fld)) dn.set(i, static_cast<int>(g), col[i]);
    }
    return dn;
}

// Minimal free resolution of coker(d1) to homological length N; the default
// presentation elsewhere is the residue field.
template <class F>
Resolution<F> minimal_free_resolution_from(RModMatrix<F> d1, int N,
                                           bool augmented_to_k = true) {
    Resolution<F> res;
    res.A = d1.algebra();
    const auto& A = *res.A;
    res.mods.push_back(d1.tgt());
    res.mods.push_back(d1.src());
    if (!d1.all_entries_positive_degree())
        throw precondition_error("presentation-not-minimal");
    res.diffs.push_back(std::move(d1));
    res.ker_dims.emplace_back();
    res.rank_dims.emplace_back();

    for (int n = 1; n < N; ++n) {
        std::map<int, int> kd, rd;
        const auto* prev = n >= 2 ? &res.ker_dims[n - 2] : nullptr;
        int prev_cap = INT_MAX;
        if (!A.artinian() && n >= 2) {
            const auto& dp = res.diffs[n - 2];
            prev_cap = A.truncation() + std::min(dp.src().min_twist(),
                                                 dp.tgt().min_twist());
        }
        auto next = syzygy_step(res.diffs.back(), &kd, &rd, prev,
                                n == 1 && augmented_to_k, prev_cap);
        res.ker_dims[n - 1] = std::move(kd);
        res.rank_dims[n - 1] = std::move(rd);
        res.ker_dims.emplace_back();
        res.rank_dims.emplace_back();
        if (!next.all_entries_positive_degree())
            throw certificate_error("minimality-failure");
        res.mods.push_back(next.src());
        res.diffs.push_back(std::move(next));
    }

    // trusted window over a truncated, non-artinian coefficient algebra
    if (A.artinian()) {
        res.valid_to = N;
    } else {
        int D = A.truncation();
        int reach = A.max_relation_degree() +
                    *std::max_element(A.weights().begin(), A.weights().end());
        res.valid_to = 0;
        for (int n = 0; n <= res.length(); ++n)
            if (res.mods[n].rank() > 0 && res.mods[n].max_twist() + reach <= D)
                res.valid_to = n;
    }
    res.minimal = true;
    return res;
}

template <class F>
Resolution<F> minimal_free_resolution(const AlgebraPtr<F>& A, int N) {
    return minimal_free_resolution_from(residue_field_presentation(A), N);
}

// Tensor-power resolution over a ring with m^2 = 0: F_i = U^{(x)i} with
// differential delta (x) U^{(x)i}; ranks e^i.  Tensor index convention: the
// leftmost factor is the most significant digit.
template <class F>
Resolution<F> bar_resolution_m2zero(const AlgebraPtr<F>& A, int N) {
    const auto& P = A->presentation();
    bool ok = A->artinian() && *A->top_degree() == 1;
    for (int w : P.weights)
        if (w != 1) ok = false;
    if (!ok) throw precondition_error("radical-square-nonzero");
    int e = P.num_vars;
    if (A->dim(1) != e) throw precondition_error("radical-square-nonzero");

    Resolution<F> res;
    res.A = A;
    long long rank = 1;
    for (int n = 0; n <= N; ++n, rank *= e) {
        FreeModule m;
        m.twists.assign(static_cast<std::size_t>(rank), n);
        res.mods.push_back(std::move(m));
    }
    for (int n = 1; n <= N; ++n) {
        RModMatrix<F> d(A, res.mods[n - 1], res.mods[n]);
        long long lower = res.mods[n - 1].rank();
        for (int v = 0; v < e; ++v) {
            Poly<F> xv;
            xv.add_term(P.fld, mono_var(e, v), P.fld.one());
            auto el = A->element_from_poly(xv);
            for (long long r = 0; r < lower; ++r)
                d.set(static_cast<int>(r), static_cast<int>(v * lower + r), el);
        }
        res.diffs.push_back(std::move(d));
        res.ker_dims.emplace_back();
        res.rank_dims.emplace_back();
    }
    res.minimal = true;
    res.valid_to = N;
    return res;
}

struct KoszulData {
    std::vector<std::vector<std::vector<int>>> subsets;  // per n: sorted lists
};

// Koszul complex on the variables of a polynomial algebra (no relations).
template <class F>
Resolution<F> koszul_resolution(const AlgebraPtr<F>& Q, KoszulData* data = nullptr) {
    const auto& P = Q->presentation();
    if (!P.relations.empty())
        throw precondition_error("koszul-needs-polynomial-ring");
    int e = P.num_vars;

    std::vector<std::vector<std::vector<int>>> subsets(e + 1);
    subsets[0] = {{}};
    for (int n = 1; n <= e; ++n) {
        std::vector<int> cur(n);
        // lexicographic enumeration of n-subsets of {0..e-1}
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == n) {
                subsets[n].push_back(cur);
                return;
            }
            for (int v = start; v < e; ++v) {
                cur[pos] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 0);
    }

    Resolution<F> res;
    res.A = Q;
    for (int n = 0; n <= e; ++n) {
        FreeModule m;
        for (const auto& S : subsets[n]) {
            int t = 0;
            for (int v : S) t += P.weights[v];
            m.twists.push_back(t);
        }
        res.mods.push_back(std::move(m));
    }
    for (int n = 1; n <= e; ++n) {
        std::map<std::vector<int>, int> index_of;
        for (int i = 0; i < static_cast<int>(subsets[n - 1].size()); ++i)
            index_of[subsets[n - 1][i]] = i;
        RModMatrix<F> d(Q, res.mods[n - 1], res.mods[n]);
        for (int j = 0; j < static_cast<int>(subsets[n].size()); ++j) {
            const auto& S = subsets[n][j];
            for (int t = 0; t < n; ++t) {
                std::vector<int> T = S;
                T.erase(T.begin() + t);
                Poly<F> xv;
                xv.add_term(P.fld, mono_var(e, S[t]),
                            t % 2 == 0 ? P.fld.one() : P.fld.from_int(-1));
                d.set(index_of[T], j, Q->element_from_poly(xv));
            }
        }
        res.diffs.push_back(std::move(d));
        res.ker_dims.emplace_back();
        res.rank_dims.emplace_back();
    }
    res.minimal = true;
    res.valid_to = e;
    if (data) data->subsets = std::move(subsets);
    return res;
}

// dim H at a spot per internal degree: incoming map `din` (may be null),
// outgoing `dout` (may be null), both attached to the middle module `mid`.
template <class F>
std::map<int, int> homology_dims(const GradedAlgebra<F>& A,
                                 const RModMatrix<F>* din,
                                 const RModMatrix<F>* dout,
                                 const FreeModule& mid,
                                 int deg_cap = INT_MAX) {
    const auto& fld = A.field();
    auto [dlo, dhi] = detail::piece_degree_range(A, mid);
    dhi = std::min(dhi, deg_cap);
    std::map<int, int> out;
    for (int deg = dlo; deg <= dhi; ++deg) {
        auto L = piece_layout(A, mid, deg);
        if (L.dim == 0) continue;
        int kdim = L.dim;
        if (dout) {
            auto M = dout->scalar_matrix(deg);
            kdim = L.dim - rref(fld, M, ColOrder::forward, false, false).rank;
        }
        int rin = 0;
        if (din) {
            auto M = din->scalar_matrix(deg);
            rin = rref(fld, M, ColOrder::forward, false, false).rank;
        }
        int h = kdim - rin;
        if (h < 0) throw certificate_error("homology-negative");
        if (h > 0) out[deg] = h;
    }
    return out;
}

// Exact verification of d_n ∘ d_{n+1} = 0, piece by piece on scalar matrices.
template <class F>
bool composes_to_zero(const RModMatrix<F>& dn, const RModMatrix<F>& dnext) {
    const auto& A = *dn.algebra();
    const auto& fld = A.field();
    auto [dlo, dhi] = detail::piece_degree_range(A, dnext.src());
    if (!A.artinian())
        dhi = std::min(dhi, A.truncation() + dn.tgt().min_twist());
    for (int deg = dlo; deg <= dhi; ++deg) {
        auto Ls = piece_layout(A, dnext.src(), deg);
        if (Ls.dim == 0) continue;
        auto Sn = dn.scalar_matrix(deg);
        auto Sx = dnext.scalar_matrix(deg);
        // group the inner matrix by row for the sparse product
        std::vector<std::vector<std::pair<int, typename F::Elem>>> by_row(Sn.cols);
        for (const auto& e : Sn.entries) by_row[e.c].emplace_back(e.r, e.v);
        std::vector<std::vector<std::pair<int, typename F::Elem>>> cols(Sx.cols);
        for (const auto& e : Sx.entries) cols[e.c].emplace_back(e.r, e.v);
        std::vector<typename F::Elem> acc(Sn.rows, fld.zero());
        for (int c = 0; c < Sx.cols; ++c) {
            std::fill(acc.begin(), acc.end(), fld.zero());
            for (const auto& [mid, v] : cols[c])
                for (const auto& [r, w] : by_row[mid])
                    acc[r] = fld.add(acc[r], fld.mul(w, v));
            for (const auto& x : acc)
                if (!fld.is_zero(x)) return false;
        }
    }
    return true;
}

}  // namespace wb
