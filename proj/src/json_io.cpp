#include "bilat/json_io.hpp"

#include "bilat/common.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bilat {

namespace {

using ordered_json = nlohmann::ordered_json;

void reject_unknown_keys(const nlohmann::json& j, const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw parse_error("unknown key '" + it.key() + "' in " + where);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::string serialize_algebra(const FinAlgebra& a) {
    ordered_json j;
    j["variety"] = a.sig().name;
    j["universe"] = a.elems();
    ordered_json ops = ordered_json::object();
    const int n = a.size();
    for (std::size_t op = 0; op < a.sig().ops.size(); ++op) {
        const auto& sym = a.sig().ops[op];
        if (sym.arity == 0) {
            ops[sym.name] = a.name_of(a.apply(static_cast<int>(op)));
        } else if (sym.arity == 1) {
            ops[sym.name] = a.table(static_cast<int>(op));
        } else {
            ordered_json rows = ordered_json::array();
            for (int x = 0; x < n; ++x) {
                ordered_json row = ordered_json::array();
                for (int y = 0; y < n; ++y) row.push_back(a.apply(static_cast<int>(op), x, y));
                rows.push_back(std::move(row));
            }
            ops[sym.name] = std::move(rows);
        }
    }
    j["operations"] = std::move(ops);
    return j.dump(2) + "\n";
}

FinAlgebra parse_algebra(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("algebra document must be a JSON object");
    reject_unknown_keys(j, {"variety", "universe", "operations"}, "algebra document");
    if (!j.contains("variety") || !j.contains("universe") || !j.contains("operations"))
        throw parse_error("algebra document needs variety, universe and operations");

    Variety v = parse_variety(j["variety"].get<std::string>());
    Signature sig = signature_of(v);

    std::vector<std::string> universe;
    for (const auto& e : j["universe"]) universe.push_back(e.get<std::string>());
    if (universe.empty()) throw parse_error("universe must be non-empty");
    const int n = static_cast<int>(universe.size());
    auto elem_index = [&](const std::string& name) {
        for (int i = 0; i < n; ++i)
            if (universe[(std::size_t)i] == name) return i;
        throw parse_error("unknown element name: " + name);
    };

    const auto& ops = j["operations"];
    if (!ops.is_object()) throw parse_error("operations must be an object");
    std::vector<std::string> allowed;
    for (const auto& sym : sig.ops) allowed.push_back(sym.name);
    reject_unknown_keys(ops, allowed, "operations");

    std::vector<std::vector<int>> tables;
    for (const auto& sym : sig.ops) {
        if (!ops.contains(sym.name))
            throw parse_error("missing operation table: " + sym.name);
        const auto& t = ops[sym.name];
        std::vector<int> table;
        auto check_index = [&](int idx) {
            if (idx < 0 || idx >= n)
                throw parse_error("index out of range in table " + sym.name);
            return idx;
        };
        if (sym.arity == 0) {
            table = {elem_index(t.get<std::string>())};
        } else if (sym.arity == 1) {
            if (!t.is_array() || static_cast<int>(t.size()) != n)
                throw parse_error("table " + sym.name + " must be a flat list of length |A|");
            for (const auto& e : t) table.push_back(check_index(e.get<int>()));
        } else {
            if (!t.is_array() || static_cast<int>(t.size()) != n)
                throw parse_error("table " + sym.name + " must have one row per element");
            for (const auto& row : t) {
                if (!row.is_array() || static_cast<int>(row.size()) != n)
                    throw parse_error("table " + sym.name + " rows must have length |A|");
                for (const auto& e : row) table.push_back(check_index(e.get<int>()));
            }
        }
        tables.push_back(std::move(table));
    }
    try {
        return FinAlgebra(std::move(sig), std::move(universe), std::move(tables));
    } catch (const validation_error& e) {
        throw parse_error(e.what());
    }
}

FinAlgebra load_algebra_file(const std::string& path) { return parse_algebra(read_file(path)); }

std::string fingerprint(const FinAlgebra& a) { return to_hex(fnv1a64(serialize_algebra(a))); }

std::string serialize_space(const StructuredSpace& x, Variety v) {
    ordered_json j;
    j["variety"] = variety_name(v);
    ordered_json sorts = ordered_json::array();
    for (const auto& names : x.point_names) {
        ordered_json s;
        s["points"] = names;
        sorts.push_back(std::move(s));
    }
    j["sorts"] = std::move(sorts);
    ordered_json rels = ordered_json::array();
    for (const auto& r : x.relations) {
        ordered_json jr;
        ordered_json pairs = ordered_json::array();
        for (auto [a, b] : r.pairs) pairs.push_back(ordered_json::array({a, b}));
        jr["pairs"] = std::move(pairs);
        rels.push_back(std::move(jr));
    }
    j["relations"] = std::move(rels);
    ordered_json nuls = ordered_json::array();
    for (std::size_t k = 0; k < x.nullary_points.size(); ++k) {
        ordered_json jn;
        jn["point"] = x.nullary_points[k];
        nuls.push_back(std::move(jn));
    }
    j["nullaries"] = std::move(nuls);
    return j.dump(2) + "\n";
}

std::pair<StructuredSpace, Variety> parse_space(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("space document must be a JSON object");
    reject_unknown_keys(j, {"variety", "sorts", "relations", "nullaries"}, "space document");
    if (!j.contains("variety") || !j.contains("sorts") || !j.contains("relations"))
        throw parse_error("space document needs variety, sorts and relations");

    Variety v = parse_variety(j["variety"].get<std::string>());
    AlterEgo ego = standard_alter_ego(v);

    StructuredSpace x;
    for (const auto& s : j["sorts"]) {
        reject_unknown_keys(s, {"points"}, "sort");
        std::vector<std::string> names;
        for (const auto& p : s["points"]) names.push_back(p.get<std::string>());
        x.point_names.push_back(std::move(names));
    }
    if (x.point_names.size() != ego.sorts.size())
        throw parse_error("sort count does not match the variety's alter ego");

    if (static_cast<std::size_t>(j["relations"].size()) != ego.relations.size())
        throw parse_error("relation count does not match the variety's alter ego");
    std::size_t ri = 0;
    for (const auto& r : j["relations"]) {
        reject_unknown_keys(r, {"pairs"}, "relation");
        StructuredSpace::RelInstance inst;
        inst.sort_a = ego.relations[ri].sort_a;
        inst.sort_b = ego.relations[ri].sort_b;
        for (const auto& p : r["pairs"]) {
            if (!p.is_array() || p.size() != 2) throw parse_error("relation pairs must be [i,j]");
            int a = p[0].get<int>(), b = p[1].get<int>();
            if (a < 0 || a >= x.sort_size(inst.sort_a) || b < 0 || b >= x.sort_size(inst.sort_b))
                throw parse_error("relation pair out of range");
            inst.pairs.emplace_back(a, b);
        }
        std::sort(inst.pairs.begin(), inst.pairs.end());
        x.relations.push_back(std::move(inst));
        ++ri;
    }

    std::size_t nul_count = j.contains("nullaries") ? j["nullaries"].size() : 0;
    if (nul_count != ego.nullaries.size())
        throw parse_error("nullary count does not match the variety's alter ego");
    if (j.contains("nullaries")) {
        std::size_t k = 0;
        for (const auto& nj : j["nullaries"]) {
            reject_unknown_keys(nj, {"point"}, "nullary");
            int p = nj["point"].get<int>();
            int s = ego.nullaries[k].sort;
            if (p < 0 || p >= x.sort_size(s)) throw parse_error("nullary point out of range");
            x.nullary_sorts.push_back(s);
            x.nullary_points.push_back(p);
            ++k;
        }
    }
    return {std::move(x), v};
}

std::pair<StructuredSpace, Variety> load_space_file(const std::string& path) {
    return parse_space(read_file(path));
}

std::string fingerprint_space(const StructuredSpace& x, Variety v) {
    return to_hex(fnv1a64(serialize_space(x, v)));
}

} // namespace bilat
