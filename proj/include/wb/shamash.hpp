#pragma once
#include <vector>

#include "wb/yoneda.hpp"

namespace wb {

// Family of higher homotopies on a Koszul resolution E over Q = k[x1..xe]
// for a homogeneous f of degree df >= 2:
//   sigma^(0) = d^E,   sum_{h=0}^{i} sigma^(h) sigma^(i-h) = f*id (i=1), 0 (i>=2).
// sigma^(i) has homological degree 2i-1 and raises internal degree by i*df,
// so its entries are homogeneous of degree i*(df-2)+1 > 0: the minimality
// preference of the construction is automatic for df >= 2.
template <class F>
struct HomotopyFamily {
    AlgebraPtr<F> Q;
    int df = 0;
    // sigma[i][n]: component with source E_n; for i >= 1 the target is
    // E_{n+2i-1} with twists shifted by -i*df, for i = 0 it is d_n: E_n -> E_{n-1}.
    std::vector<std::map<int, RModMatrix<F>>> sigma;

    // Component lookup; nullptr when the component is zero or out of range.
    const RModMatrix<F>* at(int i, int n) const {
        if (i < 0 || i >= static_cast<int>(sigma.size())) return nullptr;
        auto it = sigma[i].find(n);
        if (it == sigma[i].end() || it->second.tgt().rank() == 0 ||
            it->second.src().rank() == 0)
            return nullptr;
        return &it->second;
    }
    static int target_spot(int i, int n) { return i == 0 ? n - 1 : n + 2 * i - 1; }
};

namespace detail {

// Composite sigma^(h) o sigma^(g) restricted to E_n, as a matrix into
// E_{target} with twists shifted by -(g+h)*df; nullopt when zero.
template <class F>
std::optional<RModMatrix<F>> homotopy_composite(const HomotopyFamily<F>& H,
                                                int h, int g, int n, int df) {
    const auto* inner = H.at(g, n);
    if (!inner) return std::nullopt;
    int mid = HomotopyFamily<F>::target_spot(g, n);
    const auto* outer = H.at(h, mid);
    if (!outer) return std::nullopt;
    auto prod = shift_matrix(*outer, -g * df).mul(*inner);
    if (prod.tgt().rank() == 0) return std::nullopt;
    return prod;
}

}  // namespace detail

template <class F>
HomotopyFamily<F> higher_homotopies(const Resolution<F>& E, const Poly<F>& f,
                                    int I) {
    const auto& Q = *E.A;
    const auto& fld = Q.field();
    auto dfo = f.homogeneous_degree(Q.weights());
    if (!dfo || *dfo < 2)
        throw precondition_error("hypersurface-not-homogeneous");
    int df = *dfo;
    int e = E.length();
    auto f_elem = Q.element_from_poly(f);

    HomotopyFamily<F> H;
    H.Q = E.A;
    H.df = df;
    H.sigma.resize(I + 1);
    for (int n = 1; n <= e; ++n) H.sigma[0].emplace(n, E.d(n));

    for (int i = 1; i <= I; ++i) {
        for (int n = 0; n <= e; ++n) {
            int rhs_spot = n + 2 * i - 2;
            int tgt_spot = n + 2 * i - 1;

            // rhs = delta_{i,1} f*id - sum_{h=1}^{i-1} sigma^h sigma^{i-h}
            //       - sigma^i_{n-1} d_n
            std::optional<RModMatrix<F>> rhs;
            if (rhs_spot >= 0 && rhs_spot <= e) {
                RModMatrix<F> acc(E.A, detail::shifted(E.mod(rhs_spot), -i * df),
                                  E.mod(n));
                if (i == 1)
                    for (int j = 0; j < E.mod(n).rank(); ++j) acc.set(j, j, f_elem);
                for (int h = 1; h <= i - 1; ++h)
                    if (auto p = detail::homotopy_composite(H, h, i - h, n, df))
                        acc = acc.minus(*p);
                if (n >= 1)
                    if (auto p = detail::homotopy_composite(H, i, 0, n, df))
                        acc = acc.minus(*p);
                rhs = std::move(acc);
            }

            RModMatrix<F> sig(E.A,
                              tgt_spot <= e
                                  ? detail::shifted(E.mod(tgt_spot), -i * df)
                                  : FreeModule{},
                              E.mod(n));
            if (tgt_spot > e) {
                if (rhs && !rhs->is_zero())
                    throw certificate_error("no-solution",
                                            "homotopy obstruction not zero");
                H.sigma[i].emplace(n, std::move(sig));
                continue;
            }
            if (rhs && !rhs->is_zero()) {
                const auto& dsolve = E.d(tgt_spot);
                for (int g = 0; g < E.mod(n).rank(); ++g) {
                    int deg = E.mod(n).twists[g] + i * df;  // unshifted degree
                    auto b = detail::column_piece_vector(*rhs, g);
                    auto M = dsolve.scalar_matrix(deg);
                    auto x = solve(fld, M, b);
                    if (!x) throw certificate_error("no-solution");
                    auto col =
                        piece_vector_to_entries(Q, E.mod(tgt_spot), deg, *x);
                    for (int r = 0; r < E.mod(tgt_spot).rank(); ++r)
                        if (!col[r].is_zero(fld)) sig.set(r, g, col[r]);
                }
            }
            H.sigma[i].emplace(n, std::move(sig));
        }
    }

    // Certify sum_{h=0}^{i} sigma^h sigma^{i-h} = (f*id | 0) exactly.
    for (int i = 1; i <= I; ++i)
        for (int n = 0; n <= e; ++n) {
            int spot = n + 2 * i - 2;
            if (spot < 0 || spot > e) continue;
            RModMatrix<F> acc(E.A, detail::shifted(E.mod(spot), -i * df),
                              E.mod(n));
            for (int h = 0; h <= i; ++h)
                if (auto p = detail::homotopy_composite(H, h, i - h, n, df))
                    acc = acc.minus(p->negated());
            if (i == 1) {
                RModMatrix<F> fid(E.A, acc.tgt(), E.mod(n));
                for (int j = 0; j < E.mod(n).rank(); ++j) fid.set(j, j, f_elem);
                if (!acc.minus(fid).is_zero())
                    throw certificate_error("no-solution",
                                            "homotopy identity i=1 fails");
            } else if (!acc.is_zero()) {
                throw certificate_error("no-solution", "homotopy identity fails");
            }
        }
    return H;
}

// Resolution of k over R = Q/(f) with modules F_n = (+)_i E_{n-2i} (x) y^(i).
// Summands are ordered by i ascending, Koszul generator order within each.
template <class F>
struct ShamashResolution {
    AlgebraPtr<F> R;
    int df = 0;
    Resolution<F> res;
    // tags[n]: per generator of F_n the pair (i, index in E_{n-2i})
    std::vector<std::vector<std::pair<int, int>>> tags;
};

template <class F>
ShamashResolution<F> shamash_resolution(const Resolution<F>& E,
                                        const HomotopyFamily<F>& H,
                                        const Poly<F>& f, int N,
                                        const AlgebraPtr<F>& R) {
    const auto& Q = *E.A;
    const auto& fld = Q.field();
    int e = E.length();
    int df = H.df;
    if (static_cast<int>(H.sigma.size()) - 1 < N / 2)
        throw precondition_error("window-insufficient",
                                 "homotopy family too short");

    ShamashResolution<F> S;
    S.R = R;
    S.df = df;
    S.res.A = R;
    S.tags.resize(N + 1);

    for (int n = 0; n <= N; ++n) {
        FreeModule m;
        for (int i = 0; 2 * i <= n; ++i) {
            int spot = n - 2 * i;
            if (spot > e) continue;
            for (int j = 0; j < E.mod(spot).rank(); ++j) {
                m.twists.push_back(E.mod(spot).twists[j] + i * df);
                S.tags[n].emplace_back(i, j);
            }
        }
        S.res.mods.push_back(std::move(m));
    }

    auto poly_of = [&](const AlgebraElement<F>& a) {
        Poly<F> p;
        for (int t = 0; t < static_cast<int>(a.c.size()); ++t)
            p.add_term(fld, Q.basis(a.deg)[t], a.c[t]);
        return p;
    };
    auto row_of = [&](int n, int i, int j) {
        for (int r = 0; r < static_cast<int>(S.tags[n].size()); ++r)
            if (S.tags[n][r] == std::make_pair(i, j)) return r;
        return -1;
    };

    for (int n = 1; n <= N; ++n) {
        RModMatrix<F> d(R, S.res.mods[n - 1], S.res.mods[n]);
        for (int c = 0; c < static_cast<int>(S.tags[n].size()); ++c) {
            auto [i, j] = S.tags[n][c];
            int spot = n - 2 * i;
            // d(e (x) y^(i)) = sum_h sigma^(h)(e) (x) y^(i-h)
            for (int h = 0; h <= i; ++h) {
                const auto* sig = H.at(h, spot);
                if (!sig) continue;
                for (const auto& en : sig->column(j)) {
                    int row = row_of(n - 1, i - h, en.row);
                    if (row < 0) continue;
                    auto val = R->element_from_poly(poly_of(en.val));
                    if (val.is_zero(fld)) continue;
                    if (const auto* cur = d.get(row, c))
                        val = R->add(*cur, val);
                    d.set(row, c, std::move(val));
                }
            }
        }
        S.res.diffs.push_back(std::move(d));
        S.res.ker_dims.emplace_back();
        S.res.rank_dims.emplace_back();
    }

    // trusted window and certificates
    int D = R->truncation();
    S.res.valid_to = 0;
    for (int n = 0; n <= N; ++n)
        if (S.res.mods[n].max_twist() + df <= D) S.res.valid_to = n;
    S.res.minimal = true;
    for (int n = 1; n <= N; ++n)
        if (!S.res.d(n).all_entries_positive_degree()) S.res.minimal = false;

    for (int n = 2; n <= N; ++n)
        if (!composes_to_zero(S.res.d(n - 1), S.res.d(n)))
            throw certificate_error("shamash-d-squared");
    int cap = R->truncation() - df;
    for (int n = 1; n < N; ++n) {
        auto h = homology_dims(*R, &S.res.d(n + 1), &S.res.d(n), S.res.mod(n), cap);
        if (!h.empty()) throw certificate_error("shamash-not-exact");
    }
    for (int deg = 1; deg <= cap; ++deg) {
        auto M = S.res.d(1).scalar_matrix(deg);
        if (rank_of(fld, M) != R->dim(deg))
            throw certificate_error("shamash-h0");
    }
    return S;
}

// theta(e (x) y^(i)) = e (x) y^(i-1): degree -2 chain endomorphism, internal
// degree df; surjective with kernel the i = 0 part.
template <class F>
ChainMap<F> eisenbud_operator(const ShamashResolution<F>& S) {
    const auto& R = *S.R;
    const auto& fld = R.field();
    int N = S.res.length();
    ChainMap<F> theta;
    theta.h = 2;
    theta.internal_deg = S.df;
    for (int n = 2; n <= N; ++n) {
        RModMatrix<F> m(S.res.A, detail::shifted(S.res.mod(n - 2), S.df),
                        S.res.mod(n));
        std::vector<char> hit(S.tags[n - 2].size(), 0);
        for (int c = 0; c < static_cast<int>(S.tags[n].size()); ++c) {
            auto [i, j] = S.tags[n][c];
            if (i == 0) continue;
            for (int r = 0; r < static_cast<int>(S.tags[n - 2].size()); ++r)
                if (S.tags[n - 2][r] == std::make_pair(i - 1, j)) {
                    AlgebraElement<F> one = R.zero_element(0);
                    one.c[0] = fld.one();
                    m.set(r, c, std::move(one));
                    hit[r] = 1;
                }
        }
        for (char h : hit)
            if (!h) throw certificate_error("eisenbud-not-surjective");
        theta.comp.emplace(n, std::move(m));
    }
    // zero commutation defect: d'_{n-2} theta_n = theta_{n-1} d_n exactly
    for (int n = 3; n <= N; ++n) {
        auto lhs = detail::shift_matrix(S.res.d(n - 2), S.df)
                       .mul(theta.comp.at(n));
        auto rhs = theta.comp.at(n - 1).mul(S.res.d(n));
        if (!lhs.entries_equal(rhs))
            throw certificate_error("eisenbud-defect-nonzero");
    }
    return theta;
}

struct GulliksenReport {
    std::vector<std::tuple<int, long long, long long>> rows;  // n, lhs, rhs
    bool all_pass = true;
};

// beta_n = beta_{n-2} + binom(e, n) for the Shamash resolution of k.
template <class F>
GulliksenReport gulliksen_recurrence_check(const ShamashResolution<F>& S, int e,
                                           int N) {
    GulliksenReport rep;
    for (int n = 2; n <= N; ++n) {
        long long lhs = S.res.mod(n).rank();
        long long rhs = S.res.mod(n - 2).rank() + binom_nonneg(e, n);
        rep.rows.emplace_back(n, lhs, rhs);
        rep.all_pass = rep.all_pass && lhs == rhs;
    }
    return rep;
}

struct CentralityReport {
    bool absolute_pass = true;
    bool stable_pass = true;
    bool inverse_found = false;  // for quadratic hypersurfaces
};

// For an artinian hypersurface k[x]/(x^m): the degree-2 class commutes with
// every basis class through the window, absolutely and stably.
template <class F>
CentralityReport theta_centrality_check(const AlgebraPtr<F>& A, int window) {
    const auto& fld = A->field();
    CentralityReport rep;
    auto res = minimal_free_resolution(A, 2 * window + 3);
    auto viewR = ComplexView<F>::of(res);
    LiftEngine<F> engR(viewR);
    auto theta = generator_dual_class(viewR, 2, 0);
    for (int n = 0; n <= window; ++n)
        for (int j = 0; j < res.mod(n).rank(); ++j) {
            auto a = generator_dual_class(viewR, n, j);
            auto lt = compose_classes(engR, theta, a);
            auto rt = compose_classes(engR, a, theta);
            rep.absolute_pass = rep.absolute_pass && lt.equals(fld, rt);
        }

    auto T = splice_complete_resolution(A, res, window + 3);
    auto viewT = ComplexView<F>::of(T);
    LiftEngine<F> engT(viewT);
    auto th = iota(viewT, theta);
    for (int n = -window; n <= window; ++n)
        for (int j = 0; j < T.mod(n).rank(); ++j) {
            auto a = generator_dual_class(viewT, n, j);
            auto lt = stable_product(engT, th, a);
            auto rt = stable_product(engT, a, th);
            rep.stable_pass = rep.stable_pass && lt.equals(fld, rt);
        }
    // quadratic hypersurface: the degree -2 class inverts theta
    if (A->socle_degree() == 1) {
        auto thp = generator_dual_class(viewT, -2, 0);
        auto p1 = stable_product(engT, th, thp);
        auto p2 = stable_product(engT, thp, th);
        auto one = generator_dual_class(viewT, 0, 0);
        rep.inverse_found = p1.equals(fld, one) && p2.equals(fld, one);
    }
    return rep;
}

}  // namespace wb
