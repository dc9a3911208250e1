#include "ramsey/json_io.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

void require_fields(const json& j, std::initializer_list<const char*> fields, const char* what) {
    if (!j.is_object()) throw DomainError(std::string(what) + ": expected a JSON object");
    for (const char* f : fields)
        if (!j.contains(f)) throw DomainError(std::string(what) + ": missing field '" + f + "'");
}

json rational_to_json(const Rat& r) {
    const auto pair = rational_to_int64(r);
    if (!pair) throw DomainError("to_json: rational exceeds 64-bit num/den");
    if (pair->second == 1) return json(pair->first);
    return json{{"num", pair->first}, {"den", pair->second}};
}

Rat rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_object()) {
        require_fields(j, {"num", "den"}, "rational");
        return rational_from_int64(j["num"].get<std::int64_t>(), j["den"].get<std::int64_t>());
    }
    throw DomainError("rational: expected integer or {num, den}");
}

} // namespace

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("invalid JSON input");
    return j;
}

json to_json(const Template& t) {
    return json{{"m", t.m()}, {"letters", t.letters()}};
}

Template template_from_json(const json& j) {
    require_fields(j, {"m", "letters"}, "Template");
    return Template(j["m"].get<int>(), j["letters"].get<std::vector<int>>());
}

json to_json(const BlockSystem& bs) {
    json background = json::object();
    for (const auto& [pos, letter] : bs.background()) background[std::to_string(pos)] = letter;
    return json{{"n", bs.n()},
                {"template", to_json(bs.tmpl())},
                {"blocks", bs.blocks()},
                {"background", background}};
}

BlockSystem block_system_from_json(const json& j) {
    require_fields(j, {"n", "template", "blocks", "background"}, "BlockSystem");
    std::map<int, int> background;
    for (const auto& [key, value] : j["background"].items())
        background[std::stoi(key)] = value.get<int>();
    return BlockSystem(j["n"].get<int>(), template_from_json(j["template"]),
                       j["blocks"].get<std::vector<std::vector<int>>>(), std::move(background));
}

json to_json(const Colouring& c) {
    if (c.is_table())
        return json{{"kind", "table"}, {"m", c.m()}, {"n", c.n()}, {"k", c.k()},
                    {"table", c.entries()}};
    if (c.is_formula())
        return json{{"kind", "formula"}, {"m", c.m()}, {"n", c.n()}, {"k", c.k()},
                    {"name", c.formula_name()}, {"params", c.formula_params()}};
    throw ConfigError("to_json: derived colourings must be materialized first");
}

Colouring colouring_from_json(const json& j) {
    require_fields(j, {"kind", "m", "n"}, "Colouring");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "table") {
        require_fields(j, {"k", "table"}, "Colouring");
        return Colouring::table(j["m"].get<int>(), j["n"].get<int>(), j["k"].get<int>(),
                                j["table"].get<std::vector<int>>());
    }
    if (kind == "formula") {
        require_fields(j, {"name"}, "Colouring");
        std::map<std::string, int> params;
        if (j.contains("params"))
            for (const auto& [key, value] : j["params"].items()) params[key] = value.get<int>();
        return Colouring::formula(j["name"].get<std::string>(), params, j["m"].get<int>(),
                                  j["n"].get<int>());
    }
    throw DomainError("Colouring: unknown kind '" + kind + "'");
}

json to_json(const FiniteGroup& g) {
    json out{{"order", g.order()}, {"table", g.table()}};
    if (g.has_action()) out["action"] = g.action();
    return out;
}

FiniteGroup group_from_json(const json& j) {
    require_fields(j, {"table"}, "FiniteGroup");
    std::optional<std::vector<std::vector<int>>> action;
    if (j.contains("action")) action = j["action"].get<std::vector<std::vector<int>>>();
    return FiniteGroup(j["table"].get<std::vector<std::vector<int>>>(), std::move(action));
}

json to_json(const PointSet& p) {
    json points = json::array();
    if (p.mode() == ArithMode::Exact) {
        for (const auto& pt : p.exact_points()) {
            json row = json::array();
            for (const auto& c : pt) row.push_back(rational_to_json(c));
            points.push_back(std::move(row));
        }
        return json{{"dim", p.dim()}, {"mode", "exact"}, {"points", points}};
    }
    for (const auto& pt : p.float_points()) points.push_back(pt);
    return json{{"dim", p.dim()}, {"mode", "float"}, {"eps", p.eps()}, {"points", points}};
}

PointSet pointset_from_json(const json& j) {
    require_fields(j, {"dim", "mode", "points"}, "PointSet");
    const std::string mode = j["mode"].get<std::string>();
    const int dim = j["dim"].get<int>();
    if (mode == "exact") {
        std::vector<std::vector<Rat>> pts;
        for (const auto& row : j["points"]) {
            std::vector<Rat> p;
            for (const auto& c : row) p.push_back(rational_from_json(c));
            if (static_cast<int>(p.size()) != dim)
                throw DomainError("PointSet: point dimension differs from dim");
            pts.push_back(std::move(p));
        }
        return PointSet::from_exact(std::move(pts));
    }
    if (mode == "float") {
        const double eps = j.contains("eps") ? j["eps"].get<double>() : 1e-9;
        std::vector<std::vector<double>> pts;
        for (const auto& row : j["points"]) {
            std::vector<double> p = row.get<std::vector<double>>();
            if (static_cast<int>(p.size()) != dim)
                throw DomainError("PointSet: point dimension differs from dim");
            pts.push_back(std::move(p));
        }
        return PointSet::from_float(std::move(pts), eps);
    }
    throw DomainError("PointSet: unknown mode '" + mode + "'");
}

json to_json(const CyclicPolygon& p) {
    return json{{"k", p.k}, {"r", p.r}, {"angles", p.angles}};
}

CyclicPolygon cyclic_polygon_from_json(const json& j) {
    require_fields(j, {"k", "r", "angles"}, "CyclicPolygon");
    CyclicPolygon p;
    p.k = j["k"].get<int>();
    p.r = j["r"].get<double>();
    p.angles = j["angles"].get<std::vector<double>>();
    p.validate();
    return p;
}

json to_json(const CongruenceWitness& w) {
    json mapping = json::array();
    for (int idx : w.mapping) mapping.push_back(idx + 1);
    json out{{"mapping", mapping}, {"scale_sq", w.scale_sq}};
    if (w.scale_sq_exact) out["scale_sq_exact"] = rational_to_json(*w.scale_sq_exact);
    return out;
}

CongruenceWitness congruence_witness_from_json(const json& j) {
    require_fields(j, {"mapping"}, "CongruenceWitness");
    CongruenceWitness w;
    for (const auto& idx : j["mapping"]) w.mapping.push_back(idx.get<int>() - 1);
    if (j.contains("scale_sq_exact")) {
        w.scale_sq_exact = rational_from_json(j["scale_sq_exact"]);
        w.scale_sq = to_double(*w.scale_sq_exact);
    } else if (j.contains("scale_sq")) {
        w.scale_sq = j["scale_sq"].get<double>();
    }
    return w;
}

json to_json(const PipelineTrace& trace) {
    const auto& P = trace.params;
    json words = json::array();
    for (const auto& audit : trace.words)
        words.push_back(json{{"rearrangement", audit.rearrangement},
                             {"three_block", audit.three_block},
                             {"ones_left_of_three", audit.ones_left_of_three},
                             {"three_positions", audit.three_positions}});
    return json{{"params",
                 {{"r", P.r}, {"s", P.s}, {"ell", P.ell()}, {"a", P.a}, {"t", P.t},
                  {"d", P.d()}, {"b", P.b}, {"u", P.u()}, {"v", P.v()}, {"n", P.n},
                  {"k", trace.k}}},
                {"certificates",
                 {{"D", trace.certs.D},
                  {"F", trace.certs.F},
                  {"progression", {{"p", trace.certs.p}, {"q", trace.certs.q}}}}},
                {"blocks_in_v", trace.assembled_blocks},
                {"X", trace.X},
                {"words", words}};
}

} // namespace ramsey
