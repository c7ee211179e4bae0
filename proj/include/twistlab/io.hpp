#pragma once

#include <json.hpp>

#include "twistlab/verify.hpp"

namespace twistlab {

using Json = nlohmann::ordered_json;

// --- reports ----------------------------------------------------------------------

/// Stable JSON form of one report. Timing is isolated in its own field so
/// consumers comparing runs can drop it; everything else is deterministic
/// for fixed inputs.
inline Json report_to_json(const Report& r, bool with_timing = true) {
    Json j;
    j["check"] = r.check;
    Json in = Json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
    j["status"] = r.status;
    if (r.witness.empty()) {
        j["witness"] = nullptr;
    } else {
        Json w = Json::object();
        for (const auto& [k, v] : r.witness) w[k] = v;
        j["witness"] = w;
    }
    if (!r.flagged.empty()) {
        Json fl = Json::array();
        for (const auto& [row, what] : r.flagged) fl.push_back(Json{{"row", row}, {"detail", what}});
        j["flagged"] = fl;
    }
    if (!r.note.empty()) j["note"] = r.note;
    j["reps"] = r.reps;
    j["elapsed_ms"] = with_timing ? r.elapsed_ms : 0;
    return j;
}

inline Json reports_to_json(const std::vector<Report>& rs, bool with_timing = true) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r, with_timing));
    return arr;
}

inline std::string reports_to_markdown(const std::vector<Report>& rs, bool with_timing = true) {
    std::string out = "# verification report\n\n";
    int pass = 0, fail = 0, err = 0;
    for (const auto& r : rs) (r.status == "pass" ? pass : r.status == "fail" ? fail : err)++;
    out += "- checks: " + std::to_string(rs.size()) + ", pass: " + std::to_string(pass) +
           ", fail: " + std::to_string(fail) + ", error: " + std::to_string(err) + "\n\n";
    for (const auto& r : rs) {
        std::string badge = r.status == "pass" ? "[pass]" : r.status == "fail" ? "[FAIL]" : "[ERROR]";
        out += "## " + badge + " " + r.check;
        for (const auto& [k, v] : r.inputs) out += " " + k + "=" + v;
        out += "\n\n";
        if (!r.reps.empty()) {
            out += "- reps: ";
            for (std::size_t i = 0; i < r.reps.size(); ++i) out += (i ? ", " : "") + r.reps[i];
            out += "\n";
        }
        if (!r.note.empty()) out += "- note: " + r.note + "\n";
        for (const auto& [k, v] : r.witness) out += "- " + k + ": " + v + "\n";
        for (const auto& [row, what] : r.flagged) out += "- flagged row " + row + ": " + what + "\n";
        if (with_timing) out += "- elapsed_ms: " + std::to_string(r.elapsed_ms) + "\n";
        out += "\n";
    }
    return out;
}

// --- tensors and tables -------------------------------------------------------------

inline Json tensor2_to_json(const Tensor2& t) {
    Json j;
    Json basis = Json::array();
    for (int i = 0; i < kGlDim; ++i) basis.push_back(gl_name(i));
    j["basis"] = basis;
    Json entries = Json::array();
    for (const auto& [k, v] : t.coeffs())
        entries.push_back(Json{{"a", gl_name(k.first)}, {"b", gl_name(k.second)}, {"value", v.str()}});
    j["entries"] = entries;
    return j;
}

inline Tensor2 tensor2_from_json(const Json& j) {
    Tensor2 t;
    for (const auto& e : j.at("entries")) {
        std::string a = e.at("a"), b = e.at("b");
        auto find = [](const std::string& n) {
            for (int i = 0; i < kGlDim; ++i)
                if (gl_name(i) == n) return i;
            throw name_error("unknown basis symbol '" + n + "'");
        };
        t.add(find(a), find(b), parse_scalar(e.at("value")));
    }
    return t;
}

inline Json bracket_table_to_json(const BracketTable& t) {
    Json j;
    j["basis"] = t.basis();
    Json entries = Json::array();
    for (const auto& [key, coeffs] : t.entries()) {
        Json value = Json::object();
        for (const auto& [idx, s] : coeffs) value[t.basis()[static_cast<std::size_t>(idx)]] = s.str();
        entries.push_back(Json{{"a", t.basis()[static_cast<std::size_t>(key.first)]},
                               {"b", t.basis()[static_cast<std::size_t>(key.second)]},
                               {"value", value}});
    }
    j["entries"] = entries;
    return j;
}

inline BracketTable bracket_table_from_json(const Json& j) {
    std::vector<std::string> basis;
    for (const auto& b : j.at("basis")) basis.push_back(b);
    BracketTable t(basis);
    for (const auto& e : j.at("entries")) {
        std::vector<std::pair<std::string, Scalar>> value;
        for (const auto& [name, s] : e.at("value").items())
            value.push_back({name, parse_scalar(s.get<std::string>())});
        t.set(e.at("a").get<std::string>(), e.at("b").get<std::string>(), value);
    }
    return t;
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace twistlab
