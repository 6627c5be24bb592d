#include "wb/ringdoc.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace wb {

namespace {

struct PolyParser {
    const std::string& s;
    const std::map<std::string, int>& var_of;
    int nvars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw usage_error("parse-error",
                          what + " at position " + std::to_string(pos) +
                              " in \"" + s + "\"");
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        auto ok = [&](char c, bool first) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   c == '\'' || (!first && std::isdigit(static_cast<unsigned char>(c)));
        };
        while (pos < s.size() && ok(s[pos], pos == start)) ++pos;
        if (start == pos) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    // factor := INT | VAR [^ INT] | ( expr )
    std::map<Monomial, long long> parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        std::map<Monomial, long long> out;
        if (eat('(')) {
            out = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return out;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = parse_int();
            out[Monomial(nvars, 0)] = v;
            return out;
        }
        auto name = parse_ident();
        auto it = var_of.find(name);
        if (it == var_of.end()) fail("unknown variable '" + name + "'");
        int exp = 1;
        if (eat('^')) exp = static_cast<int>(parse_int());
        Monomial m(nvars, 0);
        m[it->second] = exp;
        out[m] = 1;
        return out;
    }

    static std::map<Monomial, long long> mul(
        const std::map<Monomial, long long>& a,
        const std::map<Monomial, long long>& b) {
        std::map<Monomial, long long> out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) out[mono_mul(ma, mb)] += ca * cb;
        return out;
    }

    std::map<Monomial, long long> parse_term() {
        auto acc = parse_factor();
        while (eat('*')) acc = mul(acc, parse_factor());
        return acc;
    }

    std::map<Monomial, long long> parse_expr() {
        std::map<Monomial, long long> acc;
        long long sign = 1;
        skip_ws();
        if (eat('-')) sign = -1;
        else eat('+');
        for (;;) {
            auto t = parse_term();
            for (const auto& [m, c] : t) acc[m] += sign * c;
            skip_ws();
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
        }
        return acc;
    }
};

}  // namespace

std::vector<std::pair<Monomial, long long>> parse_polynomial(
    const std::string& text, const std::vector<std::string>& variables) {
    std::map<std::string, int> var_of;
    for (std::size_t i = 0; i < variables.size(); ++i)
        var_of[variables[i]] = static_cast<int>(i);
    PolyParser p{text, var_of, static_cast<int>(variables.size())};
    auto acc = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    std::vector<std::pair<Monomial, long long>> out;
    for (const auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, c);
    return out;
}

RingDocument parse_ring_text(const std::string& json_text,
                             const std::string& source_name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw usage_error("parse-error", source_name + ": " + e.what());
    }
    RingDocument doc;
    doc.source = source_name;
    try {
        if (j.at("field").is_string()) {
            if (j["field"] != "rationals" && j["field"] != "QQ")
                throw usage_error("parse-error", "unknown field");
            doc.field = FieldSpec::rationals();
        } else {
            doc.field = FieldSpec::prime(j.at("field").at("prime").get<std::uint32_t>());
        }
        doc.variables = j.at("variables").get<std::vector<std::string>>();
        if (doc.variables.empty())
            throw usage_error("parse-error", "no variables");
        if (j.contains("weights"))
            doc.weights = j["weights"].get<std::vector<int>>();
        else
            doc.weights.assign(doc.variables.size(), 1);
        if (doc.weights.size() != doc.variables.size())
            throw usage_error("parse-error", "weights size mismatch");
        doc.relation_strings =
            j.at("relations").get<std::vector<std::string>>();
        doc.truncation_degree = j.at("truncation_degree").get<int>();
        if (j.contains("resolution_length"))
            doc.resolution_length = j["resolution_length"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw usage_error("parse-error", source_name + ": " + e.what());
    }
    for (const auto& r : doc.relation_strings)
        doc.relations.push_back(parse_polynomial(r, doc.variables));
    // validate homogeneity now so the CLI reports the offending relation
    for (std::size_t r = 0; r < doc.relations.size(); ++r) {
        bool first = true;
        int deg = 0;
        for (const auto& [m, c] : doc.relations[r]) {
            int d = weighted_degree(m, doc.weights);
            if (first) {
                deg = d;
                first = false;
            } else if (d != deg) {
                throw precondition_error("inhomogeneous-relation",
                                         doc.relation_strings[r]);
            }
        }
        if (first || deg < 2)
            throw precondition_error("inhomogeneous-relation",
                                     doc.relation_strings[r] +
                                         " (degree must be >= 2)");
    }
    return doc;
}

RingDocument parse_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("parse-error", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ring_text(ss.str(), path);
}

std::string ring_fingerprint(const RingDocument& doc) {
    // canonical serialization: field, weights, relations with monomials in a
    // fixed order and integer coefficients
    std::ostringstream os;
    os << doc.field.name() << "|e=" << doc.variables.size() << "|w=";
    for (int w : doc.weights) os << w << ",";
    os << "|D=" << doc.truncation_degree << "|";
    std::vector<std::string> rels;
    for (const auto& rel : doc.relations) {
        std::map<Monomial, long long> sorted(rel.begin(), rel.end());
        std::ostringstream ro;
        for (const auto& [m, c] : sorted) {
            ro << c << "[";
            for (int ex : m) ro << ex << ".";
            ro << "]";
        }
        rels.push_back(ro.str());
    }
    std::sort(rels.begin(), rels.end());
    for (const auto& r : rels) os << r << ";";
    std::string s = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

}  // namespace wb
