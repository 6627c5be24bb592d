#include <chrono>
#include <functional>
#include <iomanip>

#include "wb/periodic.hpp"
#include "wb/structure_checks.hpp"
#include "wb/workbench.hpp"

namespace wb {

namespace {

using Clock = std::chrono::steady_clock;

struct Fixture {
    std::string name;
    RingDocument doc;
    AlgebraPtr<FpField> A;
    std::optional<Resolution<FpField>> res;
    std::optional<CompleteResolution<FpField>> T;

    const Resolution<FpField>& resolution(int N) {
        if (!res || res->length() < N)
            res = minimal_free_resolution(A, N);
        return *res;
    }
    const CompleteResolution<FpField>& splice(int N) {
        if (!T || T->hi < N) T = splice_complete_resolution(A, resolution(N), N);
        return *T;
    }
};

struct Suite {
    std::string rings_dir;
    FpField fld{32003};
    std::map<std::string, Fixture> fixtures;
    std::ostream& out;
    bool all_pass = true;

    explicit Suite(std::string dir, std::ostream& os)
        : rings_dir(std::move(dir)), out(os) {}

    Fixture& fixture(const std::string& name) {
        auto it = fixtures.find(name);
        if (it != fixtures.end()) return it->second;
        Fixture f;
        f.name = name;
        f.doc = parse_ring(rings_dir + "/" + name + ".json");
        f.A = build_quotient(to_presentation(f.doc, fld));
        return fixtures.emplace(name, std::move(f)).first->second;
    }

    void criterion(int id, const std::string& name,
                   const std::function<bool(std::string&)>& body) {
        auto t0 = Clock::now();
        bool pass = false;
        std::string detail;
        try {
            pass = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            pass = false;
        }
        double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        all_pass = all_pass && pass;
        out << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << " ("
            << std::fixed << std::setprecision(1) << secs << "s)";
        if (!detail.empty()) out << " -- " << detail;
        out << "\n" << std::flush;
    }
};

std::vector<long long> betti_vec(const Resolution<FpField>& r, int N) {
    std::vector<long long> v;
    for (int n = 0; n <= N; ++n) v.push_back(r.mod(n).rank());
    return v;
}

bool criterion1(Suite& S, std::string& detail) {
    auto& fx = S.fixture("ci_2");
    const auto& res = fx.resolution(6);
    for (int n = 0; n <= 6; ++n) {
        if (res.mod(n).rank() != n + 1) return false;
        if (res.mod(n).rank() != ci_rank_formula(2, 0, n)) return false;
    }
    detail = "betti 1..7 == formula(c=2,d=0)";
    return true;
}

bool criterion2(Suite& S, std::string& detail) {
    std::vector<long long> expect{1, 3, 8, 21, 55, 144};
    auto series = poincare_coeffs_int({1}, {1, -3, 1}, 5);
    if (series != expect) return false;
    auto& R = S.fixture("ambiguous_R_e3");
    auto& T = S.fixture("ambiguous_S_e3");
    if (betti_vec(R.resolution(5), 5) != expect) return false;
    if (betti_vec(T.resolution(5), 5) != expect) return false;
    if (!R.A->is_gorenstein_artinian()) return false;
    if (T.A->is_gorenstein_artinian()) return false;
    detail = "equal betti tables, socle test separates the pair";
    return true;
}

bool criterion3(Suite& S, std::string& detail) {
    for (int e : {2, 3}) {
        auto& fx = S.fixture("m2zero_e" + std::to_string(e));
        auto mu = bass_table(fx.resolution(4 + 1), 3);
        for (int i = 0; i <= 3; ++i) {
            long long expect = i == 0 ? e : ipow(e, i - 1) * (e * e - 1);
            if (!mu.rank(i).is(expect)) return false;
        }
    }
    detail = "(e, e^2-1, e(e^2-1), e^2(e^2-1)) for e = 2, 3";
    return true;
}

bool criterion4(Suite& S, std::string& detail) {
    const int N = 5;
    for (const std::string name :
         {"ci_1", "ci_2", "hypersurface_x3", "ambiguous_R_e2", "felix"}) {
        auto& fx = S.fixture(name);
        const auto& res = fx.resolution(N);
        const auto& T = fx.splice(N);
        auto st = stable_table(T, -N, N);
        auto bt = betti_table(res, N);
        auto eb = bounded_ext_table(*fx.A, bt, -N + 1, N + 1);
        auto g = gorenstein_rank_identity_check(st, bt, -N, N);
        auto m = martsinkovsky_identity_check(st, bt, eb, -N, N);
        if (!g.all_pass || !m.all_pass) {
            detail = name + " identity failed";
            return false;
        }
    }
    detail = "rank Extv^n = beta_n + beta_{-1-n} = beta_n + Extb^{n+1}, n in [-5,5]";
    return true;
}

bool criterion5(Suite& S, std::string& detail) {
    auto& fx = S.fixture("felix");
    if (fx.A->total_dim() != 14) return false;
    const auto& res = fx.resolution(5);
    if (res.mod(1).rank() != 6 || res.mod(2).rank() != 31) return false;
    const auto& T = fx.splice(5);
    auto st = stable_table(T, -2, -1);
    if (!st.rank(-1).is(1) || !st.rank(-2).is(6)) return false;
    if (*st.degrees(-1) != std::vector<int>{-6}) return false;
    if (*st.degrees(-2) != std::vector<int>(6, -8)) return false;
    auto rep = splitting_criterion_artinian(res, T, 3);
    if (rep.verdict != "split") return false;
    // the three checks E^1 S^-1, E^2 S^-1, E^2 S^-2 discharge by degrees
    for (const auto& ch : rep.checks)
        if (!ch.by_degree) return false;
    detail = "dim 14, beta (1,6,31), S^-1 = Q(-6), S^-2 = Q(-8)^6, split by degree bookkeeping";
    return true;
}

template <class F>
bool sjodin_pass(const F& fld, const RingDocument& doc) {
    auto A = build_quotient(to_presentation(doc, fld));
    auto res = minimal_free_resolution(A, 4);
    return sjodin_verify(A, res).all_pass();
}

bool criterion6(Suite& S, std::string& detail) {
    for (const std::string name : {"ci_2", "ambiguous_R_e2"}) {
        auto& fx = S.fixture(name);
        if (!sjodin_pass(S.fld, fx.doc)) return false;
        if (!sjodin_pass(QQField{}, fx.doc)) return false;
    }
    detail = "all relation families hold in F_32003 and QQ";
    return true;
}

bool criterion7(Suite& S, std::string& detail) {
    for (const std::string name :
         {"ci_1", "ci_2", "hypersurface_x3", "m2zero_e2", "m2zero_e3",
          "ambiguous_R_e2", "ambiguous_R_e3", "ambiguous_S_e3", "felix"}) {
        auto& fx = S.fixture(name);
        const auto& res = fx.resolution(5);
        auto V = ComplexView<FpField>::of(res);
        LiftEngine<FpField> eng(V);
        for (int n = 0; n <= 4; ++n)
            if (!tate_duality_invertible(eng, n)) {
                detail = name + " at n = " + std::to_string(n);
                return false;
            }
    }
    detail = "pairing invertible for n <= 4 on every artinian fixture";
    return true;
}

bool criterion8(Suite& S, std::string& detail) {
    {
        auto& fx = S.fixture("hypersurface_x3");
        const auto& T = fx.splice(7);
        auto V = ComplexView<FpField>::of(T);
        LiftEngine<FpField> eng(V);
        auto th = generator_dual_class(V, 2, 0);
        auto thp = generator_dual_class(V, -2, 0);
        auto one = generator_dual_class(V, 0, 0);
        if (!stable_product(eng, th, thp).equals(S.fld, one)) return false;
        if (!stable_product(eng, thp, th).equals(S.fld, one)) return false;
    }
    {
        auto& fx = S.fixture("ci_2");
        const auto& T = fx.splice(10);
        auto V = ComplexView<FpField>::of(T);
        LiftEngine<FpField> eng(V);
        for (int p = -4; p <= -1; ++p)
            for (int q = -4; q <= -1; ++q)
                for (int i = 0; i < T.mod(p).rank(); ++i)
                    for (int j = 0; j < T.mod(q).rank(); ++j) {
                        auto a = generator_dual_class(V, p, i);
                        auto b = generator_dual_class(V, q, j);
                        if (!stable_product(eng, a, b).is_zero(S.fld))
                            return false;
                    }
    }
    detail = "theta theta' = 1 = theta' theta on k[x]/(x^3); T.T = 0 on ci_2, |n| <= 4";
    return true;
}

bool criterion9(Suite& S, std::string& detail) {
    auto rep = run_shamash(2, "x1^2 + x2^2", 8, 14, S.fld.spec());
    if (!rep["gulliksen"]["pass"].get<bool>()) return false;
    if (!rep["eisenbud_defect_zero"].get<bool>()) return false;
    auto ranks = rep["ranks"].get<std::vector<long long>>();
    for (int n = 0; n <= 8; ++n) {
        long long expect = 0;
        for (int i = 0; 2 * i <= n; ++i) expect += binom_nonneg(2, n - 2 * i);
        if (ranks[n] != expect) return false;
    }
    detail = "ranks sum binom(2, n-2i), Gulliksen recurrence, zero theta defect";
    return true;
}

bool criterion10(Suite& S, std::string& detail) {
    for (int e : {2, 3}) {
        auto rep = run_matrix_model(e, 3, 3, S.fld.spec());
        if (!rep["product_rule"]["pass"].get<bool>()) return false;
        if (e == 2 && !rep["alpha_generators"]["pass"].get<bool>()) return false;
        if (e == 2 && !rep["socle_window"]["pass"].get<bool>()) return false;
    }
    // membership failure exhaustively over the degree <= 2 basis of A
    auto r2 = example_9_9_check(S.fld, 2, -1, 2);
    if (!r2.all_fail_membership) return false;
    detail = "product rule e=2,3; 9.9 membership failure; socle window; alpha(xi_j)";
    return true;
}

bool criterion11(Suite& S, std::string& detail) {
    // d^2 = 0 and minimality on every resolution built in this run
    for (auto& [name, fx] : S.fixtures) {
        if (!fx.res) continue;
        const auto& res = *fx.res;
        if (!res.minimal) {
            detail = name + " not minimal";
            return false;
        }
        for (int n = 2; n <= res.length(); ++n)
            if (!composes_to_zero(res.d(n - 1), res.d(n))) {
                detail = name + " d^2 != 0 at " + std::to_string(n);
                return false;
            }
    }

    // associativity of composition products: exhaustive |a|+|b|+|c| <= 5 on
    // the small fixtures, |a|+|b|+|c| <= 4 on the large weighted one
    // (window-verified; deeper lifts there are out of desk-scale reach)
    auto assoc = [&](Fixture& fx, int cap) -> bool {
        const auto& res = fx.resolution(std::max(cap + 1, 5));
        auto V = ComplexView<FpField>::of(res);
        LiftEngine<FpField> eng(V);
        for (int p = 1; p <= cap - 2; ++p)
            for (int q = 1; q <= cap - 1 - p; ++q)
                for (int r = 1; r <= cap - p - q; ++r)
                    for (int i = 0; i < res.mod(p).rank(); ++i)
                        for (int j = 0; j < res.mod(q).rank(); ++j)
                            for (int l = 0; l < res.mod(r).rank(); ++l) {
                                auto a = generator_dual_class(V, p, i);
                                auto b = generator_dual_class(V, q, j);
                                auto c = generator_dual_class(V, r, l);
                                auto lhs = compose_classes(
                                    eng, compose_classes(eng, a, b, false), c,
                                    false);
                                auto rhs = compose_classes(
                                    eng, a, compose_classes(eng, b, c, false),
                                    false);
                                if (!lhs.equals(S.fld, rhs)) return false;
                            }
        return true;
    };
    for (const std::string name :
         {"ci_1", "ci_2", "hypersurface_x3", "m2zero_e2", "m2zero_e3",
          "ambiguous_R_e2", "ambiguous_R_e3", "ambiguous_S_e3"}) {
        if (!assoc(S.fixture(name), 5)) {
            detail = name + " associativity";
            return false;
        }
    }
    if (!assoc(S.fixture("felix"), 4)) {
        detail = "felix associativity";
        return false;
    }

    // rank agreement between F_32003 and QQ across the corpus
    QQField qq;
    for (const auto& [name, window] :
         std::vector<std::pair<std::string, int>>{
             {"ci_1", 6}, {"ci_2", 6}, {"hypersurface_x3", 6},
             {"m2zero_e2", 5}, {"m2zero_e3", 4}, {"ambiguous_R_e2", 6},
             {"ambiguous_R_e3", 5}, {"ambiguous_S_e3", 5}, {"felix", 3}}) {
        auto& fx = S.fixture(name);
        auto Aq = build_quotient(to_presentation(fx.doc, qq));
        auto rq = minimal_free_resolution(Aq, window);
        std::vector<long long> bq;
        for (int n = 0; n <= window; ++n) bq.push_back(rq.mod(n).rank());
        if (betti_vec(fx.resolution(window), window) != bq) {
            detail = name + " F_p vs QQ";
            return false;
        }
    }
    detail =
        "d^2 = 0 + minimality everywhere; associativity (weighted fixture "
        "window-verified to degree 4); F_32003/QQ rank agreement";
    return true;
}

}  // namespace

bool run_acceptance(const std::string& rings_dir, std::ostream& out) {
    Suite S(rings_dir, out);
    out << "acceptance suite (field F_32003; exact arithmetic)\n";
    S.criterion(1, "betti of k[x,y]/(x^2,y^2) matches the codimension formula",
                [&](std::string& d) { return criterion1(S, d); });
    S.criterion(2, "ambiguous pair: equal betti tables, different socle verdicts",
                [&](std::string& d) { return criterion2(S, d); });
    S.criterion(3, "bass numbers of k[x_1..x_e]/m^2 for e = 2, 3",
                [&](std::string& d) { return criterion3(S, d); });
    S.criterion(4, "stable ranks from the splice satisfy both rank identities",
                [&](std::string& d) { return criterion4(S, d); });
    S.criterion(5, "weighted Gorenstein fixture: values, twists and splitting",
                [&](std::string& d) { return criterion5(S, d); });
    S.criterion(6, "Sjodin relation families as computed Yoneda products",
                [&](std::string& d) { return criterion6(S, d); });
    S.criterion(7, "Tate duality matrices invertible for n <= 4",
                [&](std::string& d) { return criterion7(S, d); });
    S.criterion(8, "stable products: invertible theta pair and T.T = 0",
                [&](std::string& d) { return criterion8(S, d); });
    S.criterion(9, "Shamash resolution for e = 2, f = x^2 + y^2",
                [&](std::string& d) { return criterion9(S, d); });
    S.criterion(10, "periodic matrix model checks",
                [&](std::string& d) { return criterion10(S, d); });
    S.criterion(11, "property suites across the corpus",
                [&](std::string& d) { return criterion11(S, d); });
    out << (S.all_pass ? "acceptance: ALL PASS\n" : "acceptance: FAILURES\n");
    return S.all_pass;
}

}  // namespace wb
