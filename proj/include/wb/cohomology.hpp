#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "wb/complete.hpp"

namespace wb {

// Natural number extended by infinity; arithmetic saturates.
struct ExtendedNat {
    bool infinite = false;
    long long v = 0;

    static ExtendedNat finite(long long n) { return {false, n}; }
    static ExtendedNat inf() { return {true, 0}; }

    ExtendedNat operator+(const ExtendedNat& o) const {
        if (infinite || o.infinite) return inf();
        return finite(v + o.v);
    }
    bool operator==(const ExtendedNat& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool is(long long n) const { return !infinite && v == n; }
    std::string str() const { return infinite ? "inf" : std::to_string(v); }
};

enum class Provenance { direct, formula };

struct RankEntry {
    ExtendedNat rank;
    std::vector<int> degrees;  // internal-degree multiset, sorted; empty if infinite
    Provenance provenance = Provenance::direct;
};

// n -> rank with internal degrees, for Ext/Tor/bounded/stable tables.
struct RankTable {
    std::map<int, RankEntry> entries;

    ExtendedNat rank(int n) const {
        auto it = entries.find(n);
        return it == entries.end() ? ExtendedNat::finite(0) : it->second.rank;
    }
    const std::vector<int>* degrees(int n) const {
        auto it = entries.find(n);
        return it == entries.end() ? nullptr : &it->second.degrees;
    }
    void set(int n, ExtendedNat r, std::vector<int> degs,
             Provenance p = Provenance::direct) {
        std::sort(degs.begin(), degs.end());
        entries[n] = RankEntry{r, std::move(degs), p};
    }
};

// beta_n = rank F_n with twists; equals rank Ext^n(k,k) and rank Tor_n(k,k).
template <class F>
RankTable betti_table(const Resolution<F>& res, int N) {
    res.require_degree(N);
    if (res.length() < N) throw precondition_error("window-insufficient");
    RankTable t;
    for (int n = 0; n <= N; ++n)
        t.set(n, ExtendedNat::finite(res.mod(n).rank()), res.mod(n).twists);
    return t;
}

// mu^n = rank_k H^n(Hom(F, R)) computed piece by piece on the dual complex.
// Internal degrees follow the convention deg(e_j^* (x) b) = deg b - twist_j.
template <class F>
RankTable bass_table(const Resolution<F>& res, int N) {
    if (res.length() < N + 1)
        throw precondition_error("window-insufficient",
                                 "bass needs resolution to degree N+1");
    res.require_degree(N + 1);
    const auto& A = *res.A;
    RankTable t;
    for (int n = 0; n <= N; ++n) {
        FreeModule dualFn;
        for (int w : res.mod(n).twists) dualFn.twists.push_back(-w);
        RModMatrix<F> din(res.A, FreeModule{}, FreeModule{});
        bool has_in = n >= 1;
        if (has_in) din = res.d(n).block_dual();
        auto dout = res.d(n + 1).block_dual();
        auto h = homology_dims(A, has_in ? &din : nullptr, &dout, dualFn);
        long long total = 0;
        std::vector<int> degs;
        for (auto [deg, m] : h) {
            total += m;
            for (int i = 0; i < m; ++i) degs.push_back(deg);
        }
        t.set(n, ExtendedNat::finite(total), std::move(degs));
    }
    return t;
}

// rank Extb^n(k,k) = sum_{i-j=n} mu^i * beta_j.  For an artinian Gorenstein
// ring the bass table is (1 at the socle degree, then 0), giving the finite
// convolution Extb^n = beta_{-n}; for any other artinian ring every entry is
// infinite (all bass numbers are non-zero and pd k is infinite), which is the
// structural certificate - never window exhaustion.
template <class F>
RankTable bounded_ext_table(const GradedAlgebra<F>& A, const RankTable& betti,
                            int n_lo, int n_hi) {
    if (!A.artinian()) throw precondition_error("not-artinian");
    bool gor = A.is_gorenstein_artinian();
    RankTable t;
    if (!gor) {
        for (int n = n_lo; n <= n_hi; ++n)
            t.set(n, ExtendedNat::inf(), {}, Provenance::formula);
        return t;
    }
    int ds = A.socle_degree();
    int bmax = betti.entries.empty() ? -1 : betti.entries.rbegin()->first;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (n > 0) {
            t.set(n, ExtendedNat::finite(0), {}, Provenance::formula);
            continue;
        }
        if (-n > bmax)
            throw precondition_error("window-undecidable",
                                     "betti window too small at n = " +
                                         std::to_string(n));
        auto r = betti.rank(-n);
        std::vector<int> degs;
        if (const auto* d = betti.degrees(-n))
            for (int w : *d) degs.push_back(-ds - w);
        t.set(n, r, std::move(degs), Provenance::formula);
    }
    return t;
}

// rank Extv^n(k,k) read off the spliced complete resolution: rank T_n with
// the twists of T_n as internal degrees.
template <class F>
RankTable stable_table(const CompleteResolution<F>& T, int n_lo, int n_hi) {
    if (n_lo < T.lo || n_hi > T.hi)
        throw precondition_error("window-insufficient");
    RankTable t;
    for (int n = n_lo; n <= n_hi; ++n)
        t.set(n, ExtendedNat::finite(T.mod(n).rank()), T.mod(n).twists);
    return t;
}

struct IdentityCheckRow {
    int n;
    ExtendedNat lhs, rhs;
    bool pass;
};

struct IdentityCheckReport {
    std::string name;
    std::vector<IdentityCheckRow> rows;
    bool all_pass = true;

    void add(int n, ExtendedNat l, ExtendedNat r) {
        bool ok = l == r;
        rows.push_back({n, l, r, ok});
        all_pass = all_pass && ok;
    }
};

// rank Extv^n = beta_n + beta_{d-1-n} with d = 0 for artinian rings.
inline IdentityCheckReport gorenstein_rank_identity_check(
    const RankTable& stable, const RankTable& betti, int n_lo, int n_hi) {
    IdentityCheckReport rep;
    rep.name = "gorenstein-rank-identity";
    for (int n = n_lo; n <= n_hi; ++n)
        rep.add(n, stable.rank(n), betti.rank(n) + betti.rank(-1 - n));
    return rep;
}

// rank Extv^n = beta_n + rank Extb^{n+1}; the index convention n+1 is the one
// consistent with both the splice ranks and the Gorenstein identity.
inline IdentityCheckReport martsinkovsky_identity_check(
    const RankTable& stable, const RankTable& betti, const RankTable& bounded,
    int n_lo, int n_hi) {
    IdentityCheckReport rep;
    rep.name = "martsinkovsky-identity(n+1 convention)";
    for (int n = n_lo; n <= n_hi; ++n)
        rep.add(n, stable.rank(n), betti.rank(n) + bounded.rank(n + 1));
    return rep;
}

// binom with the convention binom(a,b) = 0 for a < b, b < 0 or a < 0.
inline long long binom_nonneg(long long a, long long b) {
    if (b < 0 || a < 0 || a < b) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// sum_{i=0}^{d} binom(d,i) * binom(c+n-i-1, c-1)
inline long long ci_rank_formula(int c, int d, int n) {
    if (c < 1 || d < 0) throw precondition_error("ci-formula-arguments");
    long long s = 0;
    for (int i = 0; i <= d; ++i)
        s += binom_nonneg(d, i) * binom_nonneg(c + n - i - 1, c - 1);
    return s;
}

// Stable-side lower bound of the same shape, evaluated for reports.
inline long long ci_stable_rank_formula(int c, int d, int n) {
    long long s = 0;
    for (int i = 0; i <= d; ++i)
        s += binom_nonneg(d, i) * (binom_nonneg(c + n - i - 1, c - 1) +
                                   binom_nonneg(c + d - n - i - 2, c - 1));
    return s;
}

enum class CiVerdict { ci, not_ci, undecided };

struct CiReport {
    CiVerdict verdict = CiVerdict::undecided;
    int codim = 0, dim = 0;
    long long beta2 = 0, formula2 = 0;
    bool stable_side_available = false;
    bool stable_side_pass = false;
    ExtendedNat stable2;
    long long stable_formula2 = 0;
};

// beta_2 equals the codimension formula iff complete intersection (tested at
// n = 2, the smallest decisive exponent); artinian input: d = 0, c = e.
template <class F>
CiReport ci_detect(const GradedAlgebra<F>& A, const RankTable& betti,
                   const RankTable* stable = nullptr) {
    CiReport rep;
    if (!A.artinian()) throw precondition_error("not-artinian");
    rep.dim = 0;
    rep.codim = A.num_vars();
    if (betti.entries.find(2) == betti.entries.end()) return rep;
    auto b2 = betti.rank(2);
    rep.beta2 = b2.v;
    rep.formula2 = ci_rank_formula(rep.codim, rep.dim, 2);
    rep.verdict = rep.beta2 == rep.formula2 ? CiVerdict::ci : CiVerdict::not_ci;
    if (stable && stable->entries.count(2)) {
        rep.stable_side_available = true;
        rep.stable2 = stable->rank(2);
        rep.stable_formula2 = ci_stable_rank_formula(rep.codim, rep.dim, 2);
        rep.stable_side_pass = rep.stable2.is(rep.stable_formula2);
    }
    return rep;
}

// First N+1 Taylor coefficients of num/den by exact division over QQ.
inline std::vector<mpq_class> poincare_from_rational(
    const std::vector<long long>& num, const std::vector<long long>& den,
    int N) {
    if (den.empty() || den[0] == 0)
        throw precondition_error("zero-constant-term");
    std::vector<mpq_class> c(N + 1, mpq_class(0));
    mpq_class d0(static_cast<long>(den[0]));
    for (int n = 0; n <= N; ++n) {
        mpq_class acc(0);
        if (n < static_cast<int>(num.size()))
            acc = mpq_class(static_cast<long>(num[n]));
        for (int j = 1; j <= n && j < static_cast<int>(den.size()); ++j)
            acc -= mpq_class(static_cast<long>(den[j])) * c[n - j];
        c[n] = acc / d0;
    }
    return c;
}

inline std::vector<long long> poincare_coeffs_int(
    const std::vector<long long>& num, const std::vector<long long>& den,
    int N) {
    auto q = poincare_from_rational(num, den, N);
    std::vector<long long> out;
    for (const auto& x : q) {
        if (x.get_den() != 1)
            throw certificate_error("series-not-integral");
        out.push_back(static_cast<long long>(x.get_num().get_si()));
    }
    return out;
}

}  // namespace wb
