#include <doctest.h>

#include "fixtures.hpp"
#include "wb/shamash.hpp"

using namespace wb;
using namespace wbtest;

namespace {
const FpField F32003(32003);

AlgebraPtr<FpField> poly_ring(int e, int D) {
    Presentation<FpField> p(F32003);
    p.num_vars = e;
    p.truncation_degree = D;
    return build_quotient(std::move(p));
}

Poly<FpField> sum_of_squares(int e) {
    Poly<FpField> f;
    for (int i = 0; i < e; ++i)
        f.add_term(F32003, mono(e, {{i, 2}}), F32003.one());
    return f;
}

AlgebraPtr<FpField> hypersurface_quotient(int e, const Poly<FpField>& f, int D) {
    Presentation<FpField> p(F32003);
    p.num_vars = e;
    p.truncation_degree = D;
    p.relations.push_back(f);
    return build_quotient(std::move(p));
}

std::vector<int> shamash_expected_ranks(int e, int N) {
    std::vector<int> out;
    for (int n = 0; n <= N; ++n) {
        long long r = 0;
        for (int i = 0; 2 * i <= n; ++i) r += binom_nonneg(e, n - 2 * i);
        out.push_back(static_cast<int>(r));
    }
    return out;
}
}  // namespace

TEST_CASE("higher homotopies, e=1, f=x^2: sigma^1 is multiplication by x") {
    auto Q = poly_ring(1, 10);
    auto E = koszul_resolution(Q);
    auto f = sum_of_squares(1);
    auto H = higher_homotopies(E, f, 3);  // identities certified internally
    const auto* s10 = H.at(1, 0);
    REQUIRE(s10 != nullptr);
    const auto* v = s10->get(0, 0);
    REQUIRE(v != nullptr);
    CHECK(v->deg == 1);  // linear entry, multiplication by x up to unit
    // sigma^(i) for i >= 2 vanish for degree reasons and are accepted
    CHECK(H.at(2, 0) == nullptr);
}

TEST_CASE("higher homotopies, e=2, f=x^2+y^2: linear entries, certified") {
    auto Q = poly_ring(2, 12);
    auto E = koszul_resolution(Q);
    auto f = sum_of_squares(2);
    auto H = higher_homotopies(E, f, 4);
    for (int n = 0; n <= 1; ++n) {
        const auto* s = H.at(1, n);
        REQUIRE(s != nullptr);
        for (int j = 0; j < s->src().rank(); ++j)
            for (const auto& en : s->column(j)) CHECK(en.val.deg == 1);
    }
}

TEST_CASE("shamash resolution, e=2, f=x^2+y^2: ranks 1,2,2,2,... and minimal") {
    auto Q = poly_ring(2, 14);
    auto E = koszul_resolution(Q);
    auto f = sum_of_squares(2);
    auto H = higher_homotopies(E, f, 5);
    auto R = hypersurface_quotient(2, f, 14);
    auto S = shamash_resolution(E, H, f, 8, R);
    CHECK(S.res.betti() == shamash_expected_ranks(2, 8));
    CHECK(S.res.betti() == std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2, 2});
    CHECK(S.res.minimal);
    CHECK(S.res.valid_to >= 8);
}

TEST_CASE("shamash, e=1, f=x^3: the classical 2-periodic resolution") {
    auto Q = poly_ring(1, 14);
    auto E = koszul_resolution(Q);
    Poly<FpField> f;
    f.add_term(F32003, mono(1, {{0, 3}}), F32003.one());
    auto H = higher_homotopies(E, f, 4);
    auto R = hypersurface_quotient(1, f, 14);
    auto S = shamash_resolution(E, H, f, 6, R);
    for (int n = 0; n <= 6; ++n) CHECK(S.res.mod(n).rank() == 1);
    // maps alternate x, x^2
    for (int n = 1; n <= 6; ++n) {
        const auto* v = S.res.d(n).get(0, 0);
        REQUIRE(v != nullptr);
        CHECK(v->deg == (n % 2 == 1 ? 1 : 2));
    }
    // agrees with the artinian minimal resolution of k over k[x]/(x^3)
    auto A = build_quotient(pres_hypersurface(F32003, 3, 12));
    auto min = minimal_free_resolution(A, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(min.mod(n).rank() == S.res.mod(n).rank());
        CHECK(min.mod(n).twists == S.res.mod(n).twists);
    }
}

TEST_CASE("shamash, e=3, f quadratic: ranks match the binomial sums and the minimal resolution") {
    auto Q = poly_ring(3, 12);
    auto E = koszul_resolution(Q);
    auto f = sum_of_squares(3);
    auto H = higher_homotopies(E, f, 4);
    auto R = hypersurface_quotient(3, f, 12);
    int N = 6;
    auto S = shamash_resolution(E, H, f, N, R);
    CHECK(S.res.betti() == shamash_expected_ranks(3, N));
    CHECK(S.res.betti() == std::vector<int>{1, 3, 4, 4, 4, 4, 4});
    // golden cross-check: direct minimal resolution over the truncated quotient
    auto min = minimal_free_resolution(R, N);
    REQUIRE(min.valid_to >= N);
    for (int n = 0; n <= N; ++n) {
        CHECK(min.mod(n).rank() == S.res.mod(n).rank());
        auto a = min.mod(n).twists;
        auto b = S.res.mod(n).twists;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("eisenbud operator: certified chain map, kernel and cokernel shape") {
    auto Q = poly_ring(2, 14);
    auto E = koszul_resolution(Q);
    auto f = sum_of_squares(2);
    auto H = higher_homotopies(E, f, 5);
    auto R = hypersurface_quotient(2, f, 14);
    auto S = shamash_resolution(E, H, f, 8, R);
    auto theta = eisenbud_operator(S);  // defect verified inside
    // coker ranks reproduce the Koszul ranks
    for (int n = 2; n <= 8; ++n)
        CHECK(S.res.mod(n).rank() - S.res.mod(n - 2).rank() ==
              binom_nonneg(2, n));
    // theta^2 shifts y^(i) to y^(i-2)
    for (int n = 4; n <= 8; ++n) {
        auto sq = detail::shift_matrix(theta.comp.at(n - 2), S.df)
                      .mul(theta.comp.at(n));
        for (int c = 0; c < static_cast<int>(S.tags[n].size()); ++c) {
            auto [i, j] = S.tags[n][c];
            for (const auto& en : sq.column(c)) {
                CHECK(S.tags[n - 4][en.row] == std::make_pair(i - 2, j));
                CHECK(en.val.deg == 0);
            }
        }
    }
}

TEST_CASE("eisenbud operator on the 2-periodic resolution is the shift") {
    auto Q = poly_ring(1, 14);
    auto E = koszul_resolution(Q);
    Poly<FpField> f;
    f.add_term(F32003, mono(1, {{0, 3}}), F32003.one());
    auto H = higher_homotopies(E, f, 4);
    auto R = hypersurface_quotient(1, f, 14);
    auto S = shamash_resolution(E, H, f, 6, R);
    auto theta = eisenbud_operator(S);
    for (int n = 2; n <= 6; ++n) {
        const auto* v = theta.comp.at(n).get(0, 0);
        REQUIRE(v != nullptr);
        CHECK(v->deg == 0);
        CHECK(F32003.eq(v->c[0], F32003.one()));
    }
}

TEST_CASE("gulliksen recurrence") {
    auto Q = poly_ring(2, 14);
    auto E = koszul_resolution(Q);
    auto f = sum_of_squares(2);
    auto H = higher_homotopies(E, f, 5);
    auto R = hypersurface_quotient(2, f, 14);
    auto S = shamash_resolution(E, H, f, 8, R);
    auto rep = gulliksen_recurrence_check(S, 2, 8);
    CHECK(rep.all_pass);
    // spot values: beta_2 = beta_0 + binom(2,2), beta_3 = beta_1 + binom(2,3)
    CHECK(std::get<1>(rep.rows[0]) == 2);
    CHECK(std::get<2>(rep.rows[0]) == 1 + 1);
    CHECK(std::get<1>(rep.rows[1]) == 2);
    CHECK(std::get<2>(rep.rows[1]) == 2 + 0);

    auto Q1 = poly_ring(1, 12);
    auto E1 = koszul_resolution(Q1);
    auto f1 = sum_of_squares(1);
    auto H1 = higher_homotopies(E1, f1, 4);
    auto R1 = hypersurface_quotient(1, f1, 12);
    auto S1 = shamash_resolution(E1, H1, f1, 6, R1);
    CHECK(gulliksen_recurrence_check(S1, 1, 6).all_pass);
}
