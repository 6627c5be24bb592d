#pragma once
#include <map>
#include <optional>
#include <vector>

#include "wb/field.hpp"
#include "wb/monomial.hpp"

namespace wb {

// Sparse polynomial with field coefficients, kept in map form keyed by
// exponent vector.  Used for relations and for the hypersurface data fed to
// the Shamash machinery; everything heavy happens downstream in linear
// algebra, so no effort is spent on fast polynomial arithmetic.
template <class F>
struct Poly {
    using Elem = typename F::Elem;
    std::map<Monomial, Elem> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const F& fld, const Monomial& m, const Elem& c) {
        if (fld.is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = fld.add(it->second, c);
            if (fld.is_zero(it->second)) terms.erase(it);
        }
    }

    // Weighted degree when homogeneous; nullopt for inhomogeneous or zero.
    std::optional<int> homogeneous_degree(const std::vector<int>& weights) const {
        std::optional<int> d;
        for (const auto& [m, c] : terms) {
            int dm = weighted_degree(m, weights);
            if (!d)
                d = dm;
            else if (*d != dm)
                return std::nullopt;
        }
        return d;
    }
};

template <class F>
Poly<F> poly_from_int_terms(
    const F& fld,
    const std::vector<std::pair<Monomial, long long>>& terms) {
    Poly<F> p;
    for (const auto& [m, c] : terms) p.add_term(fld, m, fld.from_int(c));
    return p;
}

template <class F>
Poly<F> poly_mono_mul(const F& fld, const Poly<F>& p, const Monomial& m) {
    Poly<F> q;
    for (const auto& [t, c] : p.terms) q.add_term(fld, mono_mul(t, m), c);
    return q;
}

}  // namespace wb
