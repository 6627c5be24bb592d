#pragma once
#include <string>
#include <vector>

#include "wb/error.hpp"

namespace wb {

// Exponent vector; the ambient variable count is fixed by context.
using Monomial = std::vector<int>;

inline int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights[i];
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Monomial mono_one(int nvars) { return Monomial(nvars, 0); }

inline Monomial mono_var(int nvars, int i) {
    Monomial m(nvars, 0);
    m[i] = 1;
    return m;
}

// Basis order within one weighted degree: descending lexicographic, so x1^d
// comes first and the last variable's pure power comes last.
inline bool mono_lex_greater(const Monomial& a, const Monomial& b) {
    return a > b;
}

// All monomials of exact weighted degree d, in descending lex order.
inline void enumerate_monomials_rec(int nvars, const std::vector<int>& weights,
                                    int var, int remaining, Monomial& cur,
                                    std::vector<Monomial>& out) {
    if (var == nvars) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (var == nvars - 1) {
        if (remaining % weights[var] == 0) {
            cur[var] = remaining / weights[var];
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    for (int e = remaining / weights[var]; e >= 0; --e) {
        cur[var] = e;
        enumerate_monomials_rec(nvars, weights, var + 1,
                                remaining - e * weights[var], cur, out);
    }
    cur[var] = 0;
}

inline std::vector<Monomial> enumerate_monomials(int nvars,
                                                 const std::vector<int>& weights,
                                                 int degree) {
    if (degree < 0) return {};
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    enumerate_monomials_rec(nvars, weights, 0, degree, cur, out);
    return out;
}

inline std::string mono_to_string(const Monomial& m,
                                  const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace wb
