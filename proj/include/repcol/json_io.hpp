#ifndef REPCOL_JSON_IO_HPP
#define REPCOL_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "repcol/formulation.hpp"
#include "repcol/rep_graph.hpp"
#include "repcol/solvers.hpp"

namespace repcol {

using Json = nlohmann::ordered_json;

/** "u,v" with 1-indexed ids. */
inline std::string arc_key(const Arc& a)
{
    return std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1);
}

inline Arc parse_arc_key(const std::string& key)
{
    auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("arc key '" + key + "' is not of the form u,v");
    try {
        std::size_t used_a = 0, used_b = 0;
        int a = std::stoi(key.substr(0, comma), &used_a);
        int b = std::stoi(key.substr(comma + 1), &used_b);
        if (used_a != comma || used_b != key.size() - comma - 1 || a < 1 || b < 1) throw std::invalid_argument(key);
        return Arc{a - 1, b - 1};
    } catch (const std::logic_error&) {
        throw ParseError("arc key '" + key + "' is not of the form u,v");
    }
}

inline Json vertex_set_json(const VertexSet& s)
{
    Json a = Json::array();
    for (Vertex v : s) a.push_back(v + 1);
    return a;
}

inline Json to_json(const RepGraph& r)
{
    Json arcs = Json::array(), edges = Json::array();
    for (const Arc& a : r.arcs) arcs.push_back({a.tail + 1, a.head + 1});
    for (const Edge& e : r.adjacency.edges()) edges.push_back({e.u, e.v});
    return Json{{"arcs", arcs}, {"edges", edges}};
}

inline Json to_json(const PointVector& p)
{
    Json o = Json::object();
    for (const auto& [a, q] : p.coords) o[arc_key(a)] = to_string(q);
    return o;
}

inline PointVector point_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("point must be a JSON object of \"u,v\": \"p/q\" entries");
    PointVector p;
    for (const auto& [key, value] : j.items()) {
        Rational q = value.is_string() ? parse_rational(value.get<std::string>())
                     : value.is_number_integer() ? Rational(value.get<long long>())
                     : throw ParseError("coordinate " + key + " must be a rational string or an integer");
        p.coords[parse_arc_key(key)] = q;
    }
    return p;
}

inline Json to_json(const LinearInequality& ineq)
{
    Json coeffs = Json::object();
    for (const auto& [a, c] : ineq.coeffs) coeffs[arc_key(a)] = to_string(c);
    Json o{{"family", std::string(family_name(ineq.family))},
           {"coeffs", coeffs},
           {"sense", std::string(sense_symbol(ineq.sense))},
           {"rhs", to_string(ineq.rhs)}};
    if (!ineq.label.empty()) o["label"] = ineq.label;
    return o;
}

inline LinearInequality inequality_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("rhs"))
        throw ParseError("inequality JSON needs \"coeffs\" and \"rhs\"");
    LinearInequality ineq;
    ineq.family = j.contains("family") ? family_from_name(j.at("family").get<std::string>()) : Family::custom;
    ineq.sense = j.contains("sense") ? sense_from_symbol(j.at("sense").get<std::string>()) : Sense::le;
    const Json& rhs = j.at("rhs");
    ineq.rhs = rhs.is_string() ? parse_rational(rhs.get<std::string>()) : Rational(rhs.get<long long>());
    for (const auto& [key, value] : j.at("coeffs").items())
        ineq.coeffs[parse_arc_key(key)] =
            value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<long long>());
    if (j.contains("label")) ineq.label = j.at("label").get<std::string>();
    return ineq;
}

inline Json to_json(const ColoringSolution& s)
{
    Json classes = Json::array();
    for (const VertexSet& c : s.classes) classes.push_back(vertex_set_json(c));
    return Json{{"colors_used", s.colors_used},
                {"classes", classes},
                {"objective", to_string(s.objective)},
                {"vector", to_json(s.vector)}};
}

}  // namespace repcol

#endif  // REPCOL_JSON_IO_HPP
