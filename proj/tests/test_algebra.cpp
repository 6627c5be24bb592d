#include <doctest.h>

#include "fixtures.hpp"
#include "wb/algebra.hpp"

using namespace wb;
using namespace wbtest;

namespace {
const FpField F32003(32003);
const QQField QQ;
}  // namespace

TEST_CASE("k[x]/(x^2) has hilbert (1,1)") {
    auto A = build_quotient(pres_ci1(F32003));
    CHECK(A->dim(0) == 1);
    CHECK(A->dim(1) == 1);
    CHECK(A->dim(2) == 0);
    CHECK(A->artinian());
    CHECK(*A->top_degree() == 1);
}

TEST_CASE("k[x,y]/(x^2,y^2): hilbert (1,2,1), dim 4") {
    auto A = build_quotient(pres_ci2(F32003));
    CHECK(A->dim(0) == 1);
    CHECK(A->dim(1) == 2);
    CHECK(A->dim(2) == 1);
    CHECK(A->dim(3) == 0);
    CHECK(A->total_dim() == 4);
    // degree-2 basis monomial is xy
    CHECK(A->basis_name(2, 0) == "x*y");
}

TEST_CASE("weighted ring: total dimension 14, hilbert (1,6,6,1) at 0,2,4,6") {
    auto A = build_quotient(pres_felix(F32003));
    CHECK(A->total_dim() == 14);
    CHECK(A->dim(0) == 1);
    CHECK(A->dim(2) == 6);
    CHECK(A->dim(4) == 6);
    CHECK(A->dim(6) == 1);
    CHECK(A->dim(1) == 0);
    CHECK(A->dim(3) == 0);
    CHECK(A->artinian());
    CHECK(*A->top_degree() == 6);
}

TEST_CASE("socle computations") {
    auto ci2 = build_quotient(pres_ci2(F32003));
    auto s = ci2->socle();
    REQUIRE(s.size() == 1);
    CHECK(s[0].first == 2);

    auto m2 = build_quotient(pres_m2zero(F32003, 2));
    CHECK(m2->socle().size() == 2);  // socle = m when m^2 = 0

    auto fx = build_quotient(pres_felix(F32003));
    auto sf = fx->socle();
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].first == 6);
}

TEST_CASE("gorenstein detection") {
    CHECK(build_quotient(pres_ci2(F32003))->is_gorenstein_artinian());
    CHECK_FALSE(build_quotient(pres_m2zero(F32003, 2))->is_gorenstein_artinian());
    CHECK(build_quotient(pres_ambiguous_R(F32003, 3))->is_gorenstein_artinian());
    CHECK_FALSE(build_quotient(pres_ambiguous_S(F32003, 3))->is_gorenstein_artinian());
    CHECK(build_quotient(pres_felix(F32003))->is_gorenstein_artinian());
}

TEST_CASE("sum of hilbert equals product of relation degrees for monomial CI") {
    // k[x,y]/(x^2, y^3): dimension 6
    Presentation<FpField> p(F32003);
    p.num_vars = 2;
    p.var_names = {"x", "y"};
    p.relations.push_back(poly_from_int_terms(F32003, {{mono(2, {{0, 2}}), 1}}));
    p.relations.push_back(poly_from_int_terms(F32003, {{mono(2, {{1, 3}}), 1}}));
    p.truncation_degree = 10;
    auto A = build_quotient(std::move(p));
    CHECK(A->total_dim() == 6);
}

template <class F>
static void check_comm_assoc(const F& fld, const GradedAlgebra<F>& A) {
    REQUIRE(A.artinian());
    REQUIRE(A.total_dim() <= 64);
    int top = *A.top_degree();
    for (int d1 = 0; d1 <= top; ++d1)
        for (int i1 = 0; i1 < A.dim(d1); ++i1) {
            auto b1 = A.basis_element(d1, i1);
            for (int d2 = 0; d2 <= top - d1; ++d2)
                for (int i2 = 0; i2 < A.dim(d2); ++i2) {
                    auto b2 = A.basis_element(d2, i2);
                    auto p12 = A.mul(b1, b2);
                    auto p21 = A.mul(b2, b1);
                    REQUIRE(p12.c == p21.c);
                    for (int d3 = 0; d3 <= top - d1 - d2; ++d3)
                        for (int i3 = 0; i3 < A.dim(d3); ++i3) {
                            auto b3 = A.basis_element(d3, i3);
                            auto l = A.mul(p12, b3);
                            auto r = A.mul(b1, A.mul(b2, b3));
                            REQUIRE(l.c == r.c);
                        }
                }
        }
}

TEST_CASE("multiplication is commutative and associative on basis triples") {
    check_comm_assoc(F32003, *build_quotient(pres_felix(F32003)));
    check_comm_assoc(F32003, *build_quotient(pres_ambiguous_S(F32003, 3)));
    check_comm_assoc(QQ, *build_quotient(pres_ci2(QQ)));
}

TEST_CASE("gorenstein flag invariant under variable permutation and rescaling") {
    // ambiguous R with e=3, variables permuted and relations rescaled
    Presentation<FpField> p(F32003);
    p.num_vars = 3;
    p.var_names = {"a", "b", "c"};
    // permuted: use (t3,t1,t2) roles; rescale by nonzero scalars
    p.relations.push_back(poly_from_int_terms(
        F32003, {{mono(3, {{2, 2}}), 3}, {mono(3, {{0, 2}}), -3}}));
    p.relations.push_back(poly_from_int_terms(
        F32003, {{mono(3, {{0, 2}}), 7}, {mono(3, {{1, 2}}), -7}}));
    p.relations.push_back(poly_from_int_terms(F32003, {{mono(3, {{2, 1}, {0, 1}}), 5}}));
    p.relations.push_back(poly_from_int_terms(F32003, {{mono(3, {{2, 1}, {1, 1}}), 11}}));
    p.relations.push_back(poly_from_int_terms(F32003, {{mono(3, {{0, 1}, {1, 1}}), 2}}));
    p.truncation_degree = 8;
    CHECK(build_quotient(std::move(p))->is_gorenstein_artinian());
}

TEST_CASE("inhomogeneous relation rejected") {
    Presentation<FpField> p(F32003);
    p.num_vars = 2;
    p.var_names = {"x", "y"};
    p.relations.push_back(poly_from_int_terms(
        F32003, {{mono(2, {{0, 2}}), 1}, {mono(2, {{1, 3}}), 1}}));
    p.truncation_degree = 8;
    CHECK_THROWS_WITH_AS(build_quotient(std::move(p)),
                         "non-homogeneous-relation", Error);
}

TEST_CASE("rationals agree with F_p on hilbert data") {
    auto Af = build_quotient(pres_ambiguous_S(F32003, 3));
    auto Aq = build_quotient(pres_ambiguous_S(QQ, 3));
    CHECK(Af->hilbert() == Aq->hilbert());
    CHECK(Af->socle().size() == Aq->socle().size());
}

TEST_CASE("truncation too small for the relation degrees is rejected") {
    Presentation<FpField> p(F32003);
    p.num_vars = 1;
    p.var_names = {"x"};
    p.relations.push_back(poly_from_int_terms(F32003, {{mono(1, {{0, 4}}), 1}}));
    p.truncation_degree = 3;
    CHECK_THROWS_WITH_AS(build_quotient(std::move(p)), "truncation-too-small",
                         Error);
}

TEST_CASE("artinian-only operations refuse truncated polynomial rings") {
    Presentation<FpField> p(F32003);
    p.num_vars = 2;
    p.truncation_degree = 6;
    auto Q = build_quotient(std::move(p));
    CHECK_FALSE(Q->artinian());
    CHECK_THROWS_WITH_AS(Q->socle(), "not-artinian", Error);
}
