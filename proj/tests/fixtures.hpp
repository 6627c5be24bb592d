#pragma once
#include <string>
#include <vector>

#include "wb/algebra.hpp"

// Programmatic versions of the shipped example rings, shared across the test
// suites.  The JSON fixtures under rings/ describe the same presentations.
namespace wbtest {

using wb::Monomial;

inline Monomial mono(int nvars, std::initializer_list<std::pair<int, int>> exps) {
    Monomial m(nvars, 0);
    for (auto [i, e] : exps) m[i] = e;
    return m;
}

// k[x]/(x^power)
template <class F>
wb::Presentation<F> pres_hypersurface(const F& fld, int power, int D = 12) {
    wb::Presentation<F> p(fld);
    p.num_vars = 1;
    p.var_names = {"x"};
    p.relations.push_back(
        wb::poly_from_int_terms(fld, {{mono(1, {{0, power}}), 1}}));
    p.truncation_degree = D;
    return p;
}

template <class F>
wb::Presentation<F> pres_ci1(const F& fld, int D = 8) {
    return pres_hypersurface(fld, 2, D);
}

// k[x,y]/(x^2, y^2)
template <class F>
wb::Presentation<F> pres_ci2(const F& fld, int D = 8) {
    wb::Presentation<F> p(fld);
    p.num_vars = 2;
    p.var_names = {"x", "y"};
    p.relations.push_back(wb::poly_from_int_terms(fld, {{mono(2, {{0, 2}}), 1}}));
    p.relations.push_back(wb::poly_from_int_terms(fld, {{mono(2, {{1, 2}}), 1}}));
    p.truncation_degree = D;
    return p;
}

// k[x1..xe]/m^2
template <class F>
wb::Presentation<F> pres_m2zero(const F& fld, int e, int D = 6) {
    wb::Presentation<F> p(fld);
    p.num_vars = e;
    for (int i = 0; i < e; ++i) p.var_names.push_back("t" + std::to_string(i + 1));
    for (int i = 0; i < e; ++i)
        for (int j = i; j < e; ++j) {
            Monomial m(e, 0);
            m[i] += 1;
            m[j] += 1;
            p.relations.push_back(wb::poly_from_int_terms(fld, {{m, 1}}));
        }
    p.truncation_degree = D;
    return p;
}

// Ring R of the ambiguous pair: k[t1..te]/({t_i^2 - t_{i+1}^2} u {t_i t_j, i<j})
template <class F>
wb::Presentation<F> pres_ambiguous_R(const F& fld, int e, int D = 8) {
    wb::Presentation<F> p(fld);
    p.num_vars = e;
    for (int i = 0; i < e; ++i) p.var_names.push_back("t" + std::to_string(i + 1));
    for (int i = 0; i + 1 < e; ++i)
        p.relations.push_back(wb::poly_from_int_terms(
            fld, {{mono(e, {{i, 2}}), 1}, {mono(e, {{i + 1, 2}}), -1}}));
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            p.relations.push_back(
                wb::poly_from_int_terms(fld, {{mono(e, {{i, 1}, {j, 1}}), 1}}));
    p.truncation_degree = D;
    return p;
}

// Ring S of the ambiguous pair (e >= 3):
// k[t1..te]/({t1^2} u {t1 t_j}_{3<=j} u {t_i t_j}_{2<=i<=j})
template <class F>
wb::Presentation<F> pres_ambiguous_S(const F& fld, int e, int D = 8) {
    wb::Presentation<F> p(fld);
    p.num_vars = e;
    for (int i = 0; i < e; ++i) p.var_names.push_back("t" + std::to_string(i + 1));
    p.relations.push_back(wb::poly_from_int_terms(fld, {{mono(e, {{0, 2}}), 1}}));
    for (int j = 2; j < e; ++j)
        p.relations.push_back(
            wb::poly_from_int_terms(fld, {{mono(e, {{0, 1}, {j, 1}}), 1}}));
    for (int i = 1; i < e; ++i)
        for (int j = i; j < e; ++j) {
            Monomial m(e, 0);
            m[i] += 1;
            m[j] += 1;
            p.relations.push_back(wb::poly_from_int_terms(fld, {{m, 1}}));
        }
    p.truncation_degree = D;
    return p;
}

// The 14-dimensional Gorenstein ring with six variables of weight 2,
// relations t_i^2, u_j^2, t_i u_j, and t1 t2 t3 - u1 u2 u3.
template <class F>
wb::Presentation<F> pres_felix(const F& fld, int D = 8) {
    wb::Presentation<F> p(fld);
    p.num_vars = 6;
    p.var_names = {"t1", "t2", "t3", "u1", "u2", "u3"};
    p.weights.assign(6, 2);
    for (int i = 0; i < 6; ++i)
        p.relations.push_back(wb::poly_from_int_terms(fld, {{mono(6, {{i, 2}}), 1}}));
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            p.relations.push_back(
                wb::poly_from_int_terms(fld, {{mono(6, {{i, 1}, {j, 1}}), 1}}));
    p.relations.push_back(wb::poly_from_int_terms(
        fld, {{mono(6, {{0, 1}, {1, 1}, {2, 1}}), 1},
              {mono(6, {{3, 1}, {4, 1}, {5, 1}}), -1}}));
    p.truncation_degree = D;
    return p;
}

// k[t1,t2]/(t1^2 - t2^2, t1 t2): the second Sjodin test ring.
template <class F>
wb::Presentation<F> pres_sjodin2(const F& fld, int D = 8) {
    return pres_ambiguous_R(fld, 2, D);
}

}  // namespace wbtest
