#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wb/linalg.hpp"
#include "wb/poly.hpp"

namespace wb {

template <class F>
struct Presentation {
    explicit Presentation(F f) : fld(std::move(f)) {}
    F fld;
    int num_vars = 0;
    std::vector<int> weights;           // positive; defaults to all 1
    std::vector<std::string> var_names;  // defaults to x1..xe
    std::vector<Poly<F>> relations;      // weighted-homogeneous, degree >= 2
    int truncation_degree = 0;
};

template <class F>
struct AlgebraElement {
    using Elem = typename F::Elem;
    int deg = 0;
    std::vector<Elem> c;  // coordinates in the degree-`deg` basis

    bool is_zero(const F& fld) const {
        for (const auto& v : c)
            if (!fld.is_zero(v)) return false;
        return true;
    }
};

// R = k[x1..xe]/I as a graded object, built degree by degree: the basis of
// degree n is the monomials of degree n modulo the span of all m*r with r a
// relation, computed by row reduction.  Everything is truncated at degree D.
template <class F>
class GradedAlgebra {
public:
    using Elem = typename F::Elem;

    struct NormalForm {
        int basis_index = -1;                        // >= 0 for basis monomials
        std::vector<std::pair<int, Elem>> combo;     // otherwise
    };

    explicit GradedAlgebra(Presentation<F> pres) : pres_(std::move(pres)) {
        validate();
        build();
    }

    const F& field() const { return pres_.fld; }
    const Presentation<F>& presentation() const { return pres_; }
    int num_vars() const { return pres_.num_vars; }
    int truncation() const { return pres_.truncation_degree; }
    const std::vector<int>& weights() const { return pres_.weights; }
    const std::vector<int>& hilbert() const { return hilbert_; }
    std::optional<int> top_degree() const { return top_degree_; }
    bool artinian() const { return top_degree_.has_value(); }
    int max_relation_degree() const { return max_rel_deg_; }

    int dim(int d) const {
        if (d < 0 || d > pres_.truncation_degree) return 0;
        if (artinian() && d > *top_degree_) return 0;
        return static_cast<int>(basis_[d].size());
    }

    // Total k-dimension; only meaningful for artinian algebras.
    int total_dim() const {
        int s = 0;
        for (int d = 0; d <= pres_.truncation_degree; ++d) s += dim(d);
        return s;
    }

    const std::vector<Monomial>& basis(int d) const { return basis_[d]; }

    std::string basis_name(int d, int i) const {
        return mono_to_string(basis_[d][i], pres_.var_names);
    }

    // Normal form of an arbitrary monomial of degree <= D, as a sparse vector
    // over the basis of its degree.
    std::vector<std::pair<int, Elem>> normal_form(const Monomial& m) const {
        int d = weighted_degree(m, pres_.weights);
        if (d > pres_.truncation_degree)
            throw precondition_error("truncation-exceeded",
                                     "monomial degree " + std::to_string(d));
        const auto& table = nf_[d];
        auto it = table.find(m);
        if (it == table.end()) throw certificate_error("normal-form-missing");
        const NormalForm& nf = it->second;
        if (nf.basis_index >= 0) return {{nf.basis_index, pres_.fld.one()}};
        return nf.combo;
    }

    AlgebraElement<F> element_from_poly(const Poly<F>& p) const {
        auto d = p.homogeneous_degree(pres_.weights);
        if (!d) throw precondition_error("non-homogeneous-element");
        AlgebraElement<F> a;
        a.deg = p.terms.empty() ? 0 : *d;
        a.c.assign(dim(a.deg), pres_.fld.zero());
        for (const auto& [m, coeff] : p.terms)
            for (const auto& [idx, v] : normal_form(m))
                a.c[idx] = pres_.fld.add(a.c[idx], pres_.fld.mul(coeff, v));
        return a;
    }

    AlgebraElement<F> unit() const {
        AlgebraElement<F> a;
        a.deg = 0;
        a.c = {pres_.fld.one()};
        return a;
    }

    AlgebraElement<F> zero_element(int deg) const {
        AlgebraElement<F> a;
        a.deg = deg;
        a.c.assign(dim(deg), pres_.fld.zero());
        return a;
    }

    AlgebraElement<F> basis_element(int deg, int i) const {
        auto a = zero_element(deg);
        a.c[i] = pres_.fld.one();
        return a;
    }

    // Product of basis elements as a sparse vector over basis(d1+d2).
    std::vector<std::pair<int, Elem>> mul_basis(int d1, int i1, int d2,
                                                int i2) const {
        Monomial m = mono_mul(basis_[d1][i1], basis_[d2][i2]);
        return normal_form(m);
    }

    AlgebraElement<F> mul(const AlgebraElement<F>& a,
                          const AlgebraElement<F>& b) const {
        const F& fld = pres_.fld;
        int d = a.deg + b.deg;
        auto out = zero_element(d);
        if (out.c.empty()) return out;
        for (int i = 0; i < static_cast<int>(a.c.size()); ++i) {
            if (fld.is_zero(a.c[i])) continue;
            for (int j = 0; j < static_cast<int>(b.c.size()); ++j) {
                if (fld.is_zero(b.c[j])) continue;
                Elem coef = fld.mul(a.c[i], b.c[j]);
                for (const auto& [idx, v] : mul_basis(a.deg, i, b.deg, j))
                    out.c[idx] = fld.add(out.c[idx], fld.mul(coef, v));
            }
        }
        return out;
    }

    AlgebraElement<F> add(const AlgebraElement<F>& a,
                          const AlgebraElement<F>& b) const {
        if (a.deg != b.deg) throw certificate_error("degree-mismatch-in-add");
        AlgebraElement<F> out = a;
        for (std::size_t i = 0; i < out.c.size(); ++i)
            out.c[i] = pres_.fld.add(out.c[i], b.c[i]);
        return out;
    }

    AlgebraElement<F> scale(const AlgebraElement<F>& a, const Elem& s) const {
        AlgebraElement<F> out = a;
        for (auto& v : out.c) v = pres_.fld.mul(v, s);
        return out;
    }

    // Matrix of multiplication by x_i from degree d to degree d + w_i.
    const ScalarMatrix<F>& var_mult(int var, int d) const {
        auto key = std::make_pair(var, d);
        auto it = var_mult_.find(key);
        if (it != var_mult_.end()) return it->second;
        int dto = d + pres_.weights[var];
        ScalarMatrix<F> M(dim(dto), dim(d));
        Monomial xv = mono_var(pres_.num_vars, var);
        for (int j = 0; j < dim(d); ++j) {
            if (dim(dto) == 0) break;
            for (const auto& [idx, v] : normal_form(mono_mul(basis_[d][j], xv)))
                M.add(pres_.fld, idx, j, v);
        }
        return var_mult_.emplace(key, std::move(M)).first->second;
    }

    // Graded basis of the annihilator of the maximal ideal.
    std::vector<std::pair<int, std::vector<Elem>>> socle() const {
        if (!artinian()) throw precondition_error("not-artinian");
        const F& fld = pres_.fld;
        std::vector<std::pair<int, std::vector<Elem>>> out;
        for (int d = 0; d <= *top_degree_; ++d) {
            if (dim(d) == 0) continue;
            int rows = 0;
            for (int v = 0; v < pres_.num_vars; ++v)
                rows += dim(d + pres_.weights[v]);
            if (rows == 0) {
                for (int j = 0; j < dim(d); ++j) {
                    std::vector<Elem> e(dim(d), fld.zero());
                    e[j] = fld.one();
                    out.emplace_back(d, std::move(e));
                }
                continue;
            }
            ScalarMatrix<F> S(rows, dim(d));
            int off = 0;
            for (int v = 0; v < pres_.num_vars; ++v) {
                const auto& M = var_mult(v, d);
                for (const auto& e : M.entries) S.add(fld, off + e.r, e.c, e.v);
                off += M.rows;
            }
            auto rr = rref(fld, S);
            for (auto& k : rr.kernel) out.emplace_back(d, std::move(k));
        }
        return out;
    }

    bool is_gorenstein_artinian() const { return socle().size() == 1; }

    // Degree of the (unique) socle generator; requires Gorenstein.
    int socle_degree() const {
        auto s = socle();
        if (s.size() != 1) throw precondition_error("not-gorenstein");
        return s.front().first;
    }

    // The fixed socle generator used by the splice: last basis element of the
    // top graded piece when the socle is spanned by it, otherwise the socle
    // vector itself (deterministic either way).
    AlgebraElement<F> socle_generator() const {
        auto s = socle();
        if (s.size() != 1) throw precondition_error("not-gorenstein");
        AlgebraElement<F> a;
        a.deg = s.front().first;
        a.c = s.front().second;
        return a;
    }

private:
    void validate() {
        auto& P = pres_;
        if (P.num_vars < 1) throw precondition_error("invalid-presentation", "e >= 1");
        if (P.weights.empty()) P.weights.assign(P.num_vars, 1);
        if (static_cast<int>(P.weights.size()) != P.num_vars)
            throw precondition_error("invalid-presentation", "weights size");
        for (int w : P.weights)
            if (w < 1) throw precondition_error("invalid-presentation", "weights positive");
        if (P.var_names.empty())
            for (int i = 0; i < P.num_vars; ++i)
                P.var_names.push_back("x" + std::to_string(i + 1));
        max_rel_deg_ = 0;
        for (const auto& r : P.relations) {
            auto d = r.homogeneous_degree(P.weights);
            if (!d || r.is_zero())
                throw precondition_error("non-homogeneous-relation");
            if (*d < 2)
                throw precondition_error("non-homogeneous-relation",
                                         "relation degree must be >= 2");
            max_rel_deg_ = std::max(max_rel_deg_, *d);
        }
        int minweight = *std::min_element(P.weights.begin(), P.weights.end());
        if (P.truncation_degree < std::max(max_rel_deg_, minweight))
            throw precondition_error("truncation-too-small");
    }

    void build() {
        const auto& P = pres_;
        const F& fld = P.fld;
        int D = P.truncation_degree;
        basis_.resize(D + 1);
        nf_.resize(D + 1);
        hilbert_.assign(D + 1, 0);

        for (int d = 0; d <= D; ++d) {
            auto monos = enumerate_monomials(P.num_vars, P.weights, d);
            std::map<Monomial, int> col_of;
            for (int j = 0; j < static_cast<int>(monos.size()); ++j)
                col_of[monos[j]] = j;

            // span of { m * r : deg(m * r) = d }
            std::vector<std::vector<std::pair<int, Elem>>> rows;
            for (const auto& r : P.relations) {
                int dr = *r.homogeneous_degree(P.weights);
                if (dr > d) continue;
                for (const auto& m : enumerate_monomials(P.num_vars, P.weights, d - dr)) {
                    std::vector<std::pair<int, Elem>> row;
                    for (const auto& [t, c] : r.terms)
                        row.emplace_back(col_of.at(mono_mul(t, m)), c);
                    rows.push_back(std::move(row));
                }
            }

            if (rows.empty()) {
                for (int j = 0; j < static_cast<int>(monos.size()); ++j) {
                    nf_[d][monos[j]] = NormalForm{j, {}};
                    basis_[d].push_back(monos[j]);
                }
                hilbert_[d] = static_cast<int>(basis_[d].size());
                continue;
            }

            ScalarMatrix<F> M(static_cast<int>(rows.size()),
                              static_cast<int>(monos.size()));
            for (int i = 0; i < static_cast<int>(rows.size()); ++i)
                for (const auto& [j, c] : rows[i]) M.add(fld, i, j, c);
            auto rr = rref(fld, M, ColOrder::forward, false, true);

            std::vector<int> basis_index(monos.size(), -1);
            for (int fc : rr.free_cols) {
                basis_index[fc] = static_cast<int>(basis_[d].size());
                basis_[d].push_back(monos[fc]);
            }
            for (int fc : rr.free_cols)
                nf_[d][monos[fc]] = NormalForm{basis_index[fc], {}};
            for (int k = 0; k < rr.rank; ++k) {
                int pc = rr.pivot_cols[k];
                NormalForm nf;
                for (int fc : rr.free_cols) {
                    Elem v = rr.rows[k][fc];
                    if (!fld.is_zero(v))
                        nf.combo.emplace_back(basis_index[fc], fld.neg(v));
                }
                std::sort(nf.combo.begin(), nf.combo.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                nf_[d][monos[pc]] = std::move(nf);
            }
            hilbert_[d] = static_cast<int>(basis_[d].size());
        }

        if (hilbert_[0] != 1) throw certificate_error("degree-zero-not-k");

        // Artinian certificate: if the basis vanishes in maxweight consecutive
        // degrees after the last non-zero one (all within D), it vanishes in
        // every higher degree as well.
        int maxweight = *std::max_element(P.weights.begin(), P.weights.end());
        int t = -1;
        for (int d = 0; d <= D; ++d)
            if (hilbert_[d] > 0) t = d;
        if (t >= 0 && t + maxweight <= D) {
            bool gap = true;
            for (int d = t + 1; d <= t + maxweight; ++d)
                if (hilbert_[d] != 0) gap = false;
            if (gap) top_degree_ = t;
        }
    }

    Presentation<F> pres_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::map<Monomial, NormalForm>> nf_;
    std::vector<int> hilbert_;
    std::optional<int> top_degree_;
    int max_rel_deg_ = 0;
    mutable std::map<std::pair<int, int>, ScalarMatrix<F>> var_mult_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const GradedAlgebra<F>>;

template <class F>
AlgebraPtr<F> build_quotient(Presentation<F> pres) {
    return std::make_shared<const GradedAlgebra<F>>(std::move(pres));
}

}  // namespace wb
