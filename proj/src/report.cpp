#include "wiener/report.hpp"

#include <sstream>

#include "json.hpp"

namespace wiener {

namespace {

using ojson = nlohmann::ordered_json;

ojson checks_to_json(const std::vector<CheckOutcome>& checks) {
    ojson arr = ojson::array();
    for (const auto& c : checks) {
        ojson o;
        o["id"] = c.id;
        o["tested"] = c.tested;
        o["violations"] = c.violations;
        arr.push_back(std::move(o));
    }
    return arr;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
    ojson j;
    j["degrees"] = report.degrees;
    j["girth"] = report.girth;
    ojson cands = ojson::array();
    for (const auto& c : report.candidates) {
        ojson o;
        o["kind"] = c.kind;
        o["wiener"] = c.wiener;
        o["canonical"] = c.canonical;
        o["dot_path"] = c.dot_path;
        cands.push_back(std::move(o));
    }
    j["candidates"] = std::move(cands);
    if (report.oracle) {
        ojson o;
        o["exhaustive"] = report.oracle->exhaustive;
        o["min_wiener"] = report.oracle->min_wiener;
        o["count"] = report.oracle->count;
        o["minimizers"] = report.oracle->minimizers;
        j["oracle"] = std::move(o);
    } else {
        j["oracle"] = nullptr;
    }
    j["checks"] = checks_to_json(report.checks);
    return j.dump(2) + "\n";
}

std::string reemit_json(const std::string& json_text) {
    return ojson::parse(json_text).dump(2) + "\n";
}

std::string conjecture_to_json(const ConjectureTable& table) {
    ojson j;
    j["degrees"] = table.degrees;
    ojson rows = ojson::array();
    for (const auto& r : table.rows) {
        ojson o;
        o["girth"] = r.girth;
        o["feasible"] = r.feasible;
        if (!r.feasible) {
            o["note"] = r.note;
        } else {
            ojson cands = ojson::array();
            for (const auto& [kind, w] : r.candidates) {
                ojson c;
                c["kind"] = kind;
                c["wiener"] = w;
                cands.push_back(std::move(c));
            }
            o["candidates"] = std::move(cands);
            o["best"] = r.best_candidate_wiener;
            if (r.oracle_ran) {
                ojson orc;
                orc["exhaustive"] = r.oracle_exhaustive;
                orc["min_wiener"] = r.oracle_min;
                orc["count"] = r.oracle_count;
                o["oracle"] = std::move(orc);
            } else {
                o["oracle"] = nullptr;
            }
        }
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    j["min_value"] = table.min_value;
    j["argmin_girths"] = table.argmin_girths;
    ojson conj;
    conj["hypothesis_ok"] = table.conjecture.hypothesis_ok;
    if (table.conjecture.hypothesis_ok) {
        conj["reduced"] = table.conjecture.reduced;
        conj["height"] = table.conjecture.height;
        conj["deep_leaf_count"] = table.conjecture.deep_leaf_count;
        conj["gamma_star"] = table.conjecture.gamma_star;
    } else {
        conj["note"] = table.conjecture.note;
    }
    j["conjecture"] = std::move(conj);
    j["agreement"] = table.agreement;
    j["largest_girth_attains_min"] = table.largest_girth_attains_min;
    return j.dump(2) + "\n";
}

std::string conjecture_to_text(const ConjectureTable& table) {
    std::ostringstream out;
    out << "degrees: " << render_degree_sequence(table.degrees) << "\n";
    out << "girth  best  attained by";
    bool any_oracle = false;
    for (const auto& r : table.rows) any_oracle = any_oracle || r.oracle_ran;
    if (any_oracle) out << "  | exhaustive (count)";
    out << "\n";
    for (const auto& r : table.rows) {
        if (!r.feasible) {
            out << r.girth << "  infeasible: " << r.note << "\n";
            continue;
        }
        out << r.girth << "  " << r.best_candidate_wiener << "  ";
        bool first = true;
        for (const auto& [kind, w] : r.candidates) {
            if (w != r.best_candidate_wiener) continue;
            if (!first) out << ",";
            out << kind;
            first = false;
        }
        if (r.oracle_ran) {
            out << "  | " << r.oracle_min << " (" << r.oracle_count << ")";
            if (!r.oracle_exhaustive) out << " [budget hit]";
        }
        out << "\n";
    }
    if (table.min_value >= 0) {
        out << "minimum over girths: " << table.min_value << " at girth";
        for (int g : table.argmin_girths) out << " " << g;
        out << "\n";
        out << "largest feasible girth attains the minimum: "
            << (table.largest_girth_attains_min ? "yes" : "no") << "\n";
    }
    if (table.conjecture.hypothesis_ok) {
        out << "predicted best girth " << table.conjecture.gamma_star
            << " (host tree height " << table.conjecture.height << ", "
            << table.conjecture.deep_leaf_count << " deepest leaves): "
            << (table.agreement ? "matches" : "does not match")
            << " the observed argmin\n";
    } else {
        out << "prediction unavailable: " << table.conjecture.note << "\n";
    }
    return out.str();
}

}  // namespace wiener
