#include "wb/report.hpp"

#include <sstream>

namespace wb {

Json rank_table_json(const RankTable& t) {
    Json rows = Json::array();
    for (const auto& [n, entry] : t.entries) {
        Json row;
        row["n"] = n;
        if (entry.rank.infinite)
            row["rank"] = "inf";
        else
            row["rank"] = entry.rank.v;
        row["degrees"] = entry.degrees;
        row["provenance"] =
            entry.provenance == Provenance::direct ? "direct" : "formula";
        rows.push_back(std::move(row));
    }
    return rows;
}

Json identity_report_json(const IdentityCheckReport& rep) {
    Json out;
    out["name"] = rep.name;
    out["pass"] = rep.all_pass;
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row;
        row["n"] = r.n;
        row["lhs"] = r.lhs.str();
        row["rhs"] = r.rhs.str();
        row["pass"] = r.pass;
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

namespace {

void render_value(std::ostringstream& os, const std::string& key,
                  const Json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_array() && !v.empty() && v[0].is_object() && v[0].contains("n") &&
        v[0].contains("rank")) {
        // rank table
        os << pad << key << ":\n";
        os << pad << "  n      rank   degrees\n";
        for (const auto& row : v) {
            std::ostringstream degs;
            for (const auto& d : row["degrees"]) degs << d << " ";
            os << pad << "  " << row["n"].dump();
            for (std::size_t i = row["n"].dump().size(); i < 7; ++i) os << ' ';
            std::string rk = row["rank"].is_string()
                                 ? row["rank"].get<std::string>()
                                 : row["rank"].dump();
            os << rk;
            for (std::size_t i = rk.size(); i < 7; ++i) os << ' ';
            os << degs.str() << "\n";
        }
        return;
    }
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k2, v2] : v.items()) render_value(os, k2, v2, indent + 2);
        return;
    }
    if (v.is_array()) {
        os << pad << key << ": " << v.dump() << "\n";
        return;
    }
    os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
       << "\n";
}

}  // namespace

std::string render_report(const Json& report) {
    std::ostringstream os;
    for (const auto& [k, v] : report.items()) render_value(os, k, v, 0);
    return os.str();
}

}  // namespace wb
