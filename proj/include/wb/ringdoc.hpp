#pragma once
#include <string>
#include <vector>

#include "wb/algebra.hpp"

namespace wb {

// Parsed and validated ring presentation document (JSON on disk).
struct RingDocument {
    FieldSpec field;
    std::vector<std::string> variables;
    std::vector<int> weights;
    std::vector<std::string> relation_strings;
    std::vector<std::vector<std::pair<Monomial, long long>>> relations;
    int truncation_degree = 0;
    int resolution_length = 6;
    std::string source;
};

// Integer-coefficient polynomial in the document's variables: sums of terms,
// `*` products, `^` powers, parentheses allowed.
std::vector<std::pair<Monomial, long long>> parse_polynomial(
    const std::string& text, const std::vector<std::string>& variables);

RingDocument parse_ring_text(const std::string& json_text,
                             const std::string& source_name);
RingDocument parse_ring(const std::string& path);

// Content hash of the canonical presentation (64-bit FNV-1a, hex).
std::string ring_fingerprint(const RingDocument& doc);

template <class F>
Presentation<F> to_presentation(const RingDocument& doc, const F& fld) {
    Presentation<F> p(fld);
    p.num_vars = static_cast<int>(doc.variables.size());
    p.var_names = doc.variables;
    p.weights = doc.weights;
    p.truncation_degree = doc.truncation_degree;
    for (std::size_t r = 0; r < doc.relations.size(); ++r) {
        auto poly = poly_from_int_terms(fld, doc.relations[r]);
        auto deg = poly.homogeneous_degree(p.weights);
        if (!deg || poly.is_zero())
            throw precondition_error("inhomogeneous-relation",
                                     doc.relation_strings[r]);
        p.relations.push_back(std::move(poly));
    }
    return p;
}

}  // namespace wb
