#include "sympair/io.hpp"

#include <sstream>

namespace sympair {

ordered_json spec_to_json(const CodeSpec& spec) {
    ordered_json j;
    j["q"] = spec.field()->q();
    j["p"] = spec.field()->p();
    j["e"] = spec.field()->e();
    j["k"] = spec.k();
    j["m"] = spec.m();
    j["t"] = spec.t();
    j["m1"] = spec.m1();
    j["n"] = spec.n();
    j["beta1"] = spec.beta1();
    j["beta2"] = spec.beta2();
    j["alphas"] = spec.alphas();
    return j;
}

CodeSpec spec_from_json(const ordered_json& j) {
    FieldPtr field;
    if (j.contains("p") && j.contains("e")) {
        field = field_new(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>());
        if (j.contains("q") && j.at("q").get<std::uint32_t>() != field->q()) {
            throw Error("spec: q = " + j.at("q").dump() + " does not match p^e = " +
                        std::to_string(field->q()));
        }
    } else if (j.contains("q")) {
        field = field_from_order(j.at("q").get<std::uint32_t>());
    } else {
        throw Error("spec: need either q or p and e");
    }

    int k = j.at("k").get<int>();
    int m = j.at("m").get<int>();
    bool has_points = j.contains("beta1") || j.contains("beta2") || j.contains("alphas");
    if (!has_points) return CodeSpec(field, k, m);
    if (!(j.contains("beta1") && j.contains("beta2") && j.contains("alphas"))) {
        throw Error("spec: beta1, beta2 and alphas must be given together");
    }
    return CodeSpec(field, k, m, j.at("beta1").get<elem_t>(), j.at("beta2").get<elem_t>(),
                    j.at("alphas").get<std::vector<elem_t>>());
}

ordered_json distribution_to_json(const WeightDistribution& wd) {
    ordered_json j = ordered_json::object();
    for (const auto& [w, c] : wd.counts) j[std::to_string(w)] = c;
    return j;
}

ordered_json diff_to_json(const DistributionDiff& diff) {
    ordered_json rows = ordered_json::array();
    for (const auto& [w, row] : diff.rows) {
        ordered_json r;
        r["weight"] = w;
        r["enumerated"] = row.enumerated;
        r["closed_form"] = row.closed_form;
        r["delta"] = std::int64_t(row.enumerated) - std::int64_t(row.closed_form);
        rows.push_back(std::move(r));
    }
    ordered_json j;
    j["rows"] = std::move(rows);
    j["match"] = diff.match;
    return j;
}

ordered_json census_to_json(const CensusTable& table) {
    ordered_json rows = ordered_json::array();
    for (const CensusRow& r : table.rows) {
        ordered_json row;
        row["class"] = r.label;
        row["pattern"] = r.pattern;
        row["enumerated"] = r.enumerated;
        row["formula"] = r.formula;
        row["delta"] = std::int64_t(r.enumerated) - std::int64_t(r.formula);
        rows.push_back(std::move(row));
    }
    ordered_json j;
    j["q"] = table.q;
    j["m"] = table.m;
    j["rows"] = std::move(rows);
    j["checks"] = {{"membership", table.checks.membership},
                   {"disjoint", table.checks.disjoint},
                   {"partition", table.checks.partition}};
    j["all_match"] = table.all_match();
    return j;
}

std::string diff_to_csv(const DistributionDiff& diff) {
    std::ostringstream out;
    out << "weight,enumerated,closed_form,delta\n";
    for (const auto& [w, row] : diff.rows) {
        out << w << ',' << row.enumerated << ',' << row.closed_form << ','
            << (std::int64_t(row.enumerated) - std::int64_t(row.closed_form)) << '\n';
    }
    return out.str();
}

std::string distribution_to_csv(const WeightDistribution& wd) {
    std::ostringstream out;
    out << "weight,enumerated,closed_form,delta\n";
    for (const auto& [w, c] : wd.counts) {
        out << w << ',' << c << ",,\n";
    }
    return out.str();
}

std::string census_to_csv(const CensusTable& table) {
    std::ostringstream out;
    out << "class,enumerated,formula,delta\n";
    for (const CensusRow& r : table.rows) {
        out << r.label << ',' << r.enumerated << ',' << r.formula << ','
            << (std::int64_t(r.enumerated) - std::int64_t(r.formula)) << '\n';
    }
    return out.str();
}

}  // namespace sympair
