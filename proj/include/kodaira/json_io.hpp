#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kodaira/fibration.hpp"
#include "kodaira/monodromy.hpp"
#include "kodaira/orbifold.hpp"

namespace kodaira {

using nlohmann::json;

// Malformed or out-of-schema input; the CLI maps this to its own exit code.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

namespace jsonio {

inline json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

// Canonical form: sorted keys (the default object is ordered), two-space
// indentation, trailing newline. Bundled files round-trip byte-identically.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << canonical_dump(j);
}

inline void require_keys(const json& j, const std::string& where,
                         const std::set<std::string>& required,
                         const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    for (const auto& key : required)
        if (!j.contains(key)) throw SchemaError(where + ": missing key '" + key + "'");
    for (const auto& [key, value] : j.items())
        if (!required.count(key) && !optional.count(key))
            throw SchemaError(where + ": unknown key '" + key + "'");
}

inline long long get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<long long>();
}

inline std::vector<long long> get_int_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array");
    std::vector<long long> out;
    for (const auto& v : j) out.push_back(get_int(v, where));
    return out;
}

inline std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": expected a string");
    return j.get<std::string>();
}

inline void require_schema(const json& j, const std::string& tag, const std::string& where) {
    if (!j.contains("schema") || !j["schema"].is_string() ||
        j["schema"].get<std::string>() != tag)
        throw SchemaError(where + ": schema must be '" + tag + "'");
}

// ---- matrices -------------------------------------------------------------

inline IntMatrix read_matrix(const json& j, const std::string& where) {
    require_keys(j, where, {"rows", "cols", "entries"});
    long long rows = get_int(j["rows"], where + ".rows");
    long long cols = get_int(j["cols"], where + ".cols");
    if (rows < 0 || cols < 0) throw SchemaError(where + ": negative dimensions");
    std::vector<long long> entries = get_int_list(j["entries"], where + ".entries");
    if (entries.size() != static_cast<std::size_t>(rows * cols))
        throw SchemaError(where + ": entry count does not match dimensions");
    return IntMatrix::from_rows(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                                entries);
}

inline json matrix_json(const IntMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (const BigInt& v : m.entries()) entries.push_back(v.to_int64());
    j["entries"] = std::move(entries);
    return j;
}

// ---- numbers --------------------------------------------------------------

// Integers below 2^53 stay JSON numbers, larger ones become strings;
// non-integral rationals are always "p/q" strings.
inline json bigint_json(const BigInt& v) {
    static const BigInt lo = -(pow(BigInt(2), 53)), hi = pow(BigInt(2), 53);
    if (lo < v && v < hi) return json(v.to_int64());
    return json(v.to_string());
}

inline json rational_json(const Rational& v) {
    if (v.is_integer()) return bigint_json(v.num());
    return json(v.to_string());
}

inline BigInt read_bigint(const json& j, const std::string& where) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    throw SchemaError(where + ": expected an integer or integer string");
}

inline Rational read_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw SchemaError(where + ": expected a number or 'p/q' string");
}

// ---- group tables ---------------------------------------------------------

inline FiniteGroupModel read_group_table(const json& j, const std::string& where) {
    require_schema(j, "group-table/1", where);
    require_keys(j, where, {"schema", "name", "identity", "elements", "table"});
    std::vector<std::string> labels;
    for (const auto& v : j["elements"]) labels.push_back(get_string(v, where + ".elements"));
    std::vector<std::vector<int>> table;
    if (!j["table"].is_array()) throw SchemaError(where + ".table: expected an array");
    for (const auto& row : j["table"]) {
        std::vector<int> r;
        for (long long v : get_int_list(row, where + ".table"))
            r.push_back(static_cast<int>(v));
        table.push_back(std::move(r));
    }
    try {
        return FiniteGroupModel::from_table(std::move(table),
                                            static_cast<int>(get_int(j["identity"], where)),
                                            std::move(labels),
                                            get_string(j["name"], where + ".name"));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

inline json group_table_json(const FiniteGroupModel& g) {
    json j;
    j["schema"] = "group-table/1";
    j["name"] = g.name();
    j["identity"] = g.identity();
    json labels = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) labels.push_back(g.label(static_cast<int>(i)));
    j["elements"] = std::move(labels);
    json table = json::array();
    for (const auto& row : g.table()) table.push_back(row);
    j["table"] = std::move(table);
    return j;
}

// ---- virtual fibration files ------------------------------------------------

inline FibrationComponent read_component(const json& j, const std::string& where,
                                         const std::optional<FiniteAbelianGroup>& group) {
    require_keys(j, where, {"d", "e", "r"}, {"weight"});
    FibrationComponent c;
    c.d = get_int(j["d"], where + ".d");
    c.e = get_int(j["e"], where + ".e");
    c.r = get_int(j["r"], where + ".r");
    if (j.contains("weight")) {
        if (!group) throw SchemaError(where + ": weight given but no group structure");
        c.weight = AbelianElement(*group, get_int_list(j["weight"], where + ".weight"));
    }
    return c;
}

inline VirtualFibration read_virtual_fibration(const json& j, const std::string& where) {
    require_schema(j, "virtual-fibration/1", where);
    require_keys(j, where,
                 {"schema", "id", "base_genus", "fibre_genus", "components"},
                 {"description", "group", "group_order", "etale_both_ways"});
    VirtualFibration vf;
    vf.b = get_int(j["base_genus"], where + ".base_genus");
    vf.f = get_int(j["fibre_genus"], where + ".fibre_genus");
    if (j.contains("group")) {
        vf.group = FiniteAbelianGroup(get_int_list(j["group"], where + ".group"));
        vf.group_order = vf.group->order().to_int64();
        if (j.contains("group_order") &&
            get_int(j["group_order"], where) != vf.group_order)
            throw SchemaError(where + ": group_order contradicts group");
    } else if (j.contains("group_order")) {
        vf.group_order = get_int(j["group_order"], where + ".group_order");
    } else {
        throw SchemaError(where + ": needs group or group_order");
    }
    vf.etale_both_ways = j.value("etale_both_ways", false);
    if (!j["components"].is_array()) throw SchemaError(where + ".components: expected an array");
    std::size_t i = 0;
    for (const auto& cj : j["components"])
        vf.components.push_back(
            read_component(cj, where + ".components[" + std::to_string(i++) + "]", vf.group));
    return vf;
}

// ---- monodromy problem files ------------------------------------------------

inline MonodromyProblem read_monodromy_problem(const json& j, const std::string& where) {
    require_schema(j, "monodromy-problem/1", where);
    require_keys(j, where,
                 {"schema", "id", "base_genus", "fibre_genus", "group", "components"},
                 {"description"});
    MonodromyProblem p;
    p.b = get_int(j["base_genus"], where + ".base_genus");
    p.f = get_int(j["fibre_genus"], where + ".fibre_genus");
    p.group = FiniteAbelianGroup(get_int_list(j["group"], where + ".group"));
    if (!j["components"].is_array()) throw SchemaError(where + ".components: expected an array");
    std::size_t i = 0;
    for (const auto& cj : j["components"]) {
        std::string cw = where + ".components[" + std::to_string(i++) + "]";
        require_keys(cj, cw, {"d", "e", "r", "weight"}, {"transfer_push", "push", "transfer"});
        ComponentAction c;
        c.d = get_int(cj["d"], cw + ".d");
        c.e = get_int(cj["e"], cw + ".e");
        c.r = get_int(cj["r"], cw + ".r");
        c.weight = AbelianElement(p.group, get_int_list(cj["weight"], cw + ".weight"));
        if (cj.contains("transfer_push")) {
            if (cj.contains("push") || cj.contains("transfer"))
                throw SchemaError(cw + ": give transfer_push or push+transfer, not both");
            c.transfer_push = read_matrix(cj["transfer_push"], cw + ".transfer_push");
        } else if (cj.contains("push") && cj.contains("transfer")) {
            // push: H_1(D) -> H_1(F), transfer: H_1(B) -> H_1(D)
            IntMatrix push = read_matrix(cj["push"], cw + ".push");
            IntMatrix transfer = read_matrix(cj["transfer"], cw + ".transfer");
            if (push.cols() != transfer.rows())
                throw SchemaError(cw + ": push and transfer shapes do not compose");
            c.transfer_push = push * transfer;
        } else {
            throw SchemaError(cw + ": needs transfer_push or push+transfer");
        }
        p.components.push_back(std::move(c));
    }
    return p;
}

// ---- generating vector files -----------------------------------------------

inline int read_element(const json& j, const FiniteGroupModel& g, const std::string& where) {
    if (j.is_string()) return g.element_by_label(j.get<std::string>());
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (!g.has_abelian_descriptor())
            throw SchemaError(where + ": numeric elements need an abelian group");
        const auto& moduli = g.abelian_moduli();
        if (moduli.size() != 1) throw SchemaError(where + ": numeric element needs a cyclic group");
        return static_cast<int>(mod_nonneg(v, moduli[0]));
    }
    if (j.is_array()) {
        if (!g.has_abelian_descriptor())
            throw SchemaError(where + ": coordinate elements need an abelian group");
        std::vector<long long> coords = get_int_list(j, where);
        const auto& moduli = g.abelian_moduli();
        if (coords.size() != moduli.size())
            throw SchemaError(where + ": coordinate count mismatch");
        std::size_t id = 0, mult = 1;
        for (std::size_t k = 0; k < moduli.size(); ++k) {
            id += static_cast<std::size_t>(mod_nonneg(coords[k], moduli[k])) * mult;
            mult *= static_cast<std::size_t>(moduli[k]);
        }
        return static_cast<int>(id);
    }
    throw SchemaError(where + ": expected a label, integer, or coordinate array");
}

inline GeneratingVector read_generating_vector(const json& j, const std::string& where,
                                               const std::filesystem::path& base_dir) {
    require_schema(j, "generating-vector/1", where);
    require_keys(j, where, {"schema", "id", "signature", "group", "images"}, {"description"});
    GeneratingVector gv;
    require_keys(j["signature"], where + ".signature", {"genus", "periods"});
    gv.signature = OrbifoldSignature(get_int(j["signature"]["genus"], where),
                                     get_int_list(j["signature"]["periods"], where));

    const json& gj = j["group"];
    require_keys(gj, where + ".group", {}, {"abelian", "table", "table_file"});
    if (gj.contains("abelian")) {
        gv.group = FiniteGroupModel::abelian(get_int_list(gj["abelian"], where + ".group.abelian"));
    } else if (gj.contains("table")) {
        gv.group = read_group_table(gj["table"], where + ".group.table");
    } else if (gj.contains("table_file")) {
        std::filesystem::path p = base_dir / get_string(gj["table_file"], where + ".group");
        gv.group = read_group_table(parse_file(p), p.string());
    } else {
        throw SchemaError(where + ".group: needs abelian, table, or table_file");
    }

    require_keys(j["images"], where + ".images", {"alpha", "beta", "gamma"});
    for (const auto& v : j["images"]["alpha"])
        gv.alpha.push_back(read_element(v, gv.group, where + ".images.alpha"));
    for (const auto& v : j["images"]["beta"])
        gv.beta.push_back(read_element(v, gv.group, where + ".images.beta"));
    for (const auto& v : j["images"]["gamma"])
        gv.gamma.push_back(read_element(v, gv.group, where + ".images.gamma"));
    return gv;
}

// ---- realization reports -----------------------------------------------------

inline json invariant_row_json(const InvariantRow& row) {
    json j;
    j["g_b1"] = bigint_json(row.g_b1);
    j["g_f1"] = bigint_json(row.g_f1);
    j["g_b2"] = bigint_json(row.g_b2);
    j["g_f2"] = bigint_json(row.g_f2);
    j["c2"] = rational_json(row.c2);
    j["c1_sq"] = rational_json(row.c1_sq);
    j["sigma"] = rational_json(row.sigma);
    j["slope"] = rational_json(row.slope);
    return j;
}

inline json realization_json(const std::string& id, const RealizationReport& rep) {
    json j;
    j["id"] = id;
    j["obstruction"] = rep.obstruction_value.coords;
    j["obstruction_order"] = rep.obstruction_order;
    j["stabilizer_index"] = bigint_json(rep.stabilizer);
    j["minimal_degree"] = bigint_json(rep.minimal_degree);
    j["row"] = invariant_row_json(rep.realized);
    return j;
}

}  // namespace jsonio
}  // namespace kodaira
