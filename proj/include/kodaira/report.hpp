#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kodaira/enumerate_tables.hpp"
#include "kodaira/fpf.hpp"
#include "kodaira/json_io.hpp"

namespace kodaira::report {

inline std::string join(const std::vector<long long>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// ---- CSV rows ----------------------------------------------------------------

inline std::string graph_csv_header() { return "sigma,b,order,r,note,flags"; }

inline std::string graph_csv_row(const GraphTypeRow& r) {
    std::vector<std::string> flags;
    if (r.unbounded_graph_count) flags.push_back("unbounded-graph-count");
    if (r.order_beyond_table) flags.push_back("order-beyond-table");
    std::string flag;
    for (std::size_t i = 0; i < flags.size(); ++i) flag += (i ? "+" : "") + flags[i];
    return std::to_string(r.sigma) + "," + std::to_string(r.b) + "," + std::to_string(r.order) +
           "," + join(r.r, "+") + "," + r.annotation + "," + flag;
}

inline std::string sig4_csv_header() { return "label,b,f,order,components,note"; }

inline std::string sig4_components(const SigFourRow& r) {
    std::string s;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& c = r.components[i];
        if (i) s += "+";
        s += std::to_string(c.g_d) + ":" + std::to_string(c.d) + ":" + std::to_string(c.e);
    }
    return s;
}

inline std::string sig4_csv_row(const SigFourRow& r, const std::string& note = "") {
    return r.label + "," + std::to_string(r.b) + "," + std::to_string(r.f) + "," +
           std::to_string(r.order) + "," + sig4_components(r) + "," + note;
}

inline std::string fpf_csv_header() { return "genus,order,quotient_genus,periods"; }

inline std::string fpf_csv_row(const FpfType& t) {
    return std::to_string(t.b) + "," + std::to_string(t.d) + "," + std::to_string(t.q) + "," +
           (t.orders.empty() ? "-" : join(t.orders, "+"));
}

inline std::string nielsen_csv_header() {
    return "genus,order,quotient_genus,periods,class";
}

inline std::string nielsen_csv_row(const FpfType& t, const NielsenClass& cls) {
    return std::to_string(t.b) + "," + std::to_string(t.d) + "," + std::to_string(t.q) + "," +
           (t.orders.empty() ? "-" : join(t.orders, "+")) + "," +
           (cls.empty() ? "-" : join(cls, "+"));
}

// ---- set-style golden comparison ----------------------------------------------

struct GoldenDiff {
    std::vector<std::string> missing;     // in golden, not computed
    std::vector<std::string> unexpected;  // computed, not in golden
    bool clean() const { return missing.empty() && unexpected.empty(); }
};

inline std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (first) {
            first = false;  // header
            continue;
        }
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

inline GoldenDiff compare_line_sets(const std::vector<std::string>& computed,
                                    const std::vector<std::string>& golden) {
    GoldenDiff diff;
    std::multiset<std::string> cs(computed.begin(), computed.end());
    for (const auto& g : golden) {
        auto it = cs.find(g);
        if (it == cs.end())
            diff.missing.push_back(g);
        else
            cs.erase(it);
    }
    diff.unexpected.assign(cs.begin(), cs.end());
    return diff;
}

inline std::string read_text_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- bundled labels and notes for the signature-4 table -----------------------

struct Sig4Annotation {
    std::string label;
    std::string note;
};

// keyed by the row identity "b,f,order,components"
inline std::map<std::string, Sig4Annotation> load_sig4_annotations(
    const std::filesystem::path& path) {
    json j = jsonio::parse_file(path);
    jsonio::require_schema(j, "sig4-annotations/1", path.string());
    jsonio::require_keys(j, path.string(), {"schema", "rows"});
    std::map<std::string, Sig4Annotation> out;
    for (const auto& row : j["rows"]) {
        jsonio::require_keys(row, path.string() + ".rows[]",
                             {"label", "b", "f", "order", "components"}, {"note"});
        std::string key = std::to_string(jsonio::get_int(row["b"], "b")) + "," +
                          std::to_string(jsonio::get_int(row["f"], "f")) + "," +
                          std::to_string(jsonio::get_int(row["order"], "order")) + "," +
                          jsonio::get_string(row["components"], "components");
        out[key] = {jsonio::get_string(row["label"], "label"), row.value("note", "")};
    }
    return out;
}

inline void attach_sig4_labels(std::vector<SigFourRow>& rows,
                               const std::map<std::string, Sig4Annotation>& annotations) {
    for (auto& r : rows) {
        std::string key = std::to_string(r.b) + "," + std::to_string(r.f) + "," +
                          std::to_string(r.order) + "," + sig4_components(r);
        auto it = annotations.find(key);
        r.label = it == annotations.end() ? "?" : it->second.label;
    }
    std::sort(rows.begin(), rows.end(), [](const SigFourRow& a, const SigFourRow& b) {
        // G-labels first, then C-labels, numerically within each
        auto rank = [](const std::string& l) {
            if (l.empty() || l == "?") return std::make_tuple(2, 0LL);
            long long n = 0;
            for (char c : l.substr(1)) n = n * 10 + (c - '0');
            return std::make_tuple(l[0] == 'G' ? 0 : 1, n);
        };
        auto ra = rank(a.label), rb = rank(b.label);
        if (ra != rb) return ra < rb;
        return a < b;
    });
}

}  // namespace kodaira::report
