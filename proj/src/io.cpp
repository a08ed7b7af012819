#include "tddel/io.hpp"

#include "tddel/errors.hpp"
#include "tddel/rational.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace tddel::io {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<VertexId> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<VertexId> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw InputError(std::string(what) + " must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Rational rational_field(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
    throw InputError("rationals must be strings like \"7/10\" (or integers)");
}

} // namespace

json to_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (const Face& f : c.facets()) {
        if (f.empty()) continue; // implicit
        facets.push_back(f);
    }
    return json{{"vertices", c.vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    const auto vertices = string_list(require(j, "vertices"), "vertices");
    const json& facets_json = require(j, "facets");
    if (!facets_json.is_array()) throw InputError("facets must be an array");
    std::vector<Face> facets;
    for (const auto& f : facets_json) facets.push_back(make_face(string_list(f, "facet")));
    return SimplicialComplex::close_downward(vertices, facets);
}

json to_json(const Representation& r) {
    return json{{"d", r.d()}, {"elements", r.elements()}, {"orders", r.orders()}};
}

Representation representation_from_json(const json& j) {
    const json& d_json = require(j, "d");
    if (!d_json.is_number_integer()) throw InputError("d must be an integer");
    const int d = d_json.get<int>();
    const json& orders_json = require(j, "orders");
    if (!orders_json.is_array()) throw InputError("orders must be an array");
    std::vector<std::vector<VertexId>> orders;
    for (const auto& o : orders_json) orders.push_back(string_list(o, "order"));
    if (d != static_cast<int>(orders.size()))
        throw InputError("d does not match the number of orders");
    Representation r(std::move(orders));
    if (j.contains("elements")) {
        const auto declared = string_list(j.at("elements"), "elements");
        auto sorted = declared;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != r.elements())
            throw InputError("declared elements do not match the orders");
    }
    return r;
}

json to_json(const PointConfiguration& p) {
    json points = json::object();
    for (const auto& [label, coords] : p.points) {
        json list = json::array();
        for (const auto& c : coords) list.push_back(rational_to_string(c));
        points[label] = std::move(list);
    }
    return json{{"d", p.d}, {"points", points}};
}

PointConfiguration points_from_json(const json& j) {
    const json& d_json = require(j, "d");
    if (!d_json.is_number_integer()) throw InputError("d must be an integer");
    const json& points_json = require(j, "points");
    if (!points_json.is_object()) throw InputError("points must be an object");
    std::map<VertexId, std::vector<Rational>> points;
    for (const auto& [label, coords] : points_json.items()) {
        if (!coords.is_array()) throw InputError("coordinates must be arrays");
        std::vector<Rational> vec;
        for (const auto& c : coords) vec.push_back(rational_field(c));
        points[label] = std::move(vec);
    }
    return PointConfiguration::create(d_json.get<int>(), std::move(points));
}

json to_json(const PlanarPointSet& p) {
    json points = json::object();
    for (const auto& [label, xy] : p.points)
        points[label] = json::array({rational_to_string(xy.first),
                                     rational_to_string(xy.second)});
    return json{{"points", points}};
}

PlanarPointSet planar_from_json(const json& j) {
    const json& points_json = require(j, "points");
    if (!points_json.is_object()) throw InputError("points must be an object");
    std::map<VertexId, std::pair<Rational, Rational>> points;
    for (const auto& [label, xy] : points_json.items()) {
        if (!xy.is_array() || xy.size() != 2)
            throw InputError("planar points must be [x, y] pairs");
        points[label] = {rational_field(xy[0]), rational_field(xy[1])};
    }
    return PlanarPointSet::create(std::move(points));
}

json to_json(const TDSystem& s) {
    json rows = json::array();
    for (const auto& [edge, order] : s.rows)
        rows.push_back(json{{"edge", edge}, {"order", order + 1}});
    json cols = json::array();
    for (std::size_t v = 0; v < s.vertices.size(); ++v)
        for (int j = 0; j < s.d - 1; ++j)
            cols.push_back(json{{"vertex", s.vertices[v]}, {"coord", j + 1}});
    json entries = json::array();
    for (std::size_t row = 0; row < s.rows.size(); ++row)
        for (const auto& [col, sign] : s.row_entries[row])
            entries.push_back(json::array({row, col, sign}));
    return json{{"d", s.d},
                {"rows", rows},
                {"cols", cols},
                {"entries", entries},
                {"inequalities", system_inequalities(s)}};
}

std::string system_to_csv(const TDSystem& s) {
    std::ostringstream out;
    out << "edge_u,edge_v,order,vertex,coord,value\n";
    for (std::size_t row = 0; row < s.rows.size(); ++row) {
        const auto& [edge, order] = s.rows[row];
        for (const auto& [col, sign] : s.row_entries[row]) {
            const int v = col / (s.d - 1);
            const int j = col % (s.d - 1);
            out << edge[0] << ',' << edge[1] << ',' << order + 1 << ','
                << s.vertices[static_cast<std::size_t>(v)] << ',' << j + 1 << ','
                << sign << '\n';
        }
    }
    return out.str();
}

json to_json(const MultiFlow& m) {
    json list = json::array();
    for (const auto& [arc, value] : m.flow) {
        const auto& [order, tail, head] = arc;
        list.push_back(json{{"order", order + 1},
                            {"from", tail},
                            {"to", head},
                            {"value", rational_to_string(value)}});
    }
    return list;
}

MultiFlow multiflow_from_json(const json& j) {
    const json* list = &j;
    MultiFlow m;
    if (j.is_object()) {
        const json& d_json = require(j, "d");
        if (!d_json.is_number_integer()) throw InputError("d must be an integer");
        m.d = d_json.get<int>();
        list = &require(j, "multiflow");
    }
    if (!list->is_array()) throw InputError("a multi-flow is a list of arc entries");
    int max_order = 0;
    for (const auto& entry : *list) {
        const json& order_json = require(entry, "order");
        if (!order_json.is_number_integer() || order_json.get<int>() < 1)
            throw InputError("arc order must be a positive integer");
        const int order = order_json.get<int>();
        max_order = std::max(max_order, order);
        const json& from = require(entry, "from");
        const json& to = require(entry, "to");
        if (!from.is_string() || !to.is_string())
            throw InputError("arc endpoints must be strings");
        m.flow[{order - 1, from.get<std::string>(), to.get<std::string>()}] =
            rational_field(require(entry, "value"));
    }
    if (m.d == 0) m.d = max_order;
    return m;
}

json to_json(const FeasibilityVerdict& v) {
    if (v.solution) {
        json solution = json::object();
        for (const auto& [vertex, coords] : *v.solution) {
            json list = json::array();
            for (const auto& c : coords) list.push_back(rational_to_string(c));
            solution[vertex] = std::move(list);
        }
        return json{{"solution", solution}};
    }
    return json{{"certificate", json{{"multiflow", to_json(*v.certificate)}}}};
}

json to_json(const StandardnessReport& r) {
    json j{{"standard", r.is_standard}};
    if (r.maxima) j["maxima"] = *r.maxima;
    return j;
}

json to_json(const CounterexampleReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back(json{{"id", v.id},
                                {"orders", v.orders},
                                {"certificate", to_json(v.certificate)},
                                {"certificate_ok", v.certificate_ok},
                                {"pinned_certificate_ok", v.pinned_certificate_ok}});
    }
    return json{{"delta", to_json(r.delta)},
                {"exhaustive", r.exhaustive},
                {"candidates_total", r.candidates_total},
                {"candidates_matching", r.candidates_matching},
                {"all_infeasible", r.all_infeasible},
                {"pinned_certificate_all_ok", r.pinned_all_ok},
                {"candidates", verdicts}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace tddel::io
