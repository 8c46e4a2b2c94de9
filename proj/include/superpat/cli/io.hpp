#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "superpat/error.hpp"
#include "superpat/outerplanar/graph.hpp"
#include "superpat/outerplanar/quadset.hpp"
#include "superpat/perm/point_set.hpp"
#include "superpat/poset/drawing.hpp"

namespace superpat {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

inline std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw ParseError(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

inline Rational as_rational(const Json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    return parse_rational(as_string(j, "coordinate"));
}

inline Json point_json(const Point& p, bool with_label = true) {
    Json o;
    o["x"] = to_string(p.x);
    o["y"] = to_string(p.y);
    if (p.tag) {
        o["tag"] = std::string(tag_name(*p.tag));
    }
    if (with_label && p.label) {
        o["label"] = *p.label;
    }
    return o;
}

inline Point point_from(const Json& o) {
    Point p{as_rational(field(o, "x")), as_rational(field(o, "y")), std::nullopt, std::nullopt};
    if (o.contains("tag")) {
        p.tag = parse_tag(as_string(o.at("tag"), "tag"));
    }
    if (o.contains("label")) {
        p.label = as_string(o.at("label"), "label");
    }
    return p;
}

template <class F> auto parse_guard(const std::string& text, F&& f) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return f(j);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("unexpected JSON shape: ") + e.what());
    }
}

} // namespace detail

// PointSet: [{"x": "p/q", "y": "p/q", "tag"?: ..., "label"?: ...}, ...]

inline Json to_json(const PointSet& ps) {
    Json a = Json::array();
    for (const auto& p : ps) {
        a.push_back(detail::point_json(p));
    }
    return a;
}

inline PointSet pointset_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("point set must be a JSON array");
    }
    PointSet out;
    for (const auto& o : j) {
        out.push_back(detail::point_from(o));
    }
    return out;
}

// Dag: {"vertices": [...], "edges": [["u", "v"], ...]}

inline Json to_json(const Dag& g) {
    Json o;
    o["vertices"] = g.labels();
    Json e = Json::array();
    for (auto [u, v] : g.edges()) {
        e.push_back(Json::array({g.label(u), g.label(v)}));
    }
    o["edges"] = e;
    return o;
}

inline Dag dag_from_json(const Json& j) {
    std::vector<std::string> labels;
    const Json& vs = detail::field(j, "vertices");
    if (!vs.is_array()) {
        throw ParseError("'vertices' must be an array");
    }
    for (const auto& v : vs) {
        labels.push_back(detail::as_string(v, "vertex"));
    }
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        id[labels[i]] = i;
    }
    std::vector<Edge> edges;
    const Json& es = detail::field(j, "edges");
    if (!es.is_array()) {
        throw ParseError("'edges' must be an array");
    }
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("each edge must be a pair of vertex names");
        }
        auto u = id.find(detail::as_string(e[0], "edge endpoint"));
        auto v = id.find(detail::as_string(e[1], "edge endpoint"));
        if (u == id.end() || v == id.end()) {
            throw ParseError("edge names an unknown vertex");
        }
        edges.emplace_back(u->second, v->second);
    }
    return Dag(std::move(labels), edges);
}

// Drawing: Dag JSON plus "placement": {vertex: {"x": ..., "y": ...}}

inline Json to_json(const Drawing& d) {
    Json o = to_json(d.graph);
    Json pl = Json::object();
    for (std::size_t v = 0; v < d.graph.size(); ++v) {
        pl[d.graph.label(v)] = detail::point_json(d.placement[v], false);
    }
    o["placement"] = pl;
    return o;
}

inline Drawing drawing_from_json(const Json& j) {
    Drawing d{dag_from_json(j), {}};
    const Json& pl = detail::field(j, "placement");
    for (std::size_t v = 0; v < d.graph.size(); ++v) {
        const std::string& name = d.graph.label(v);
        if (!pl.is_object() || !pl.contains(name)) {
            throw ParseError("no placement for vertex '" + name + "'");
        }
        Point p = detail::point_from(pl.at(name));
        p.label = name;
        d.placement.push_back(p);
    }
    return d;
}

// StOuterplanarGraph: {"top": [...], "bottom": [...], "interior": [{"from", "to", "dir"}]}

inline Json to_json(const StOuterplanarGraph& g) {
    Json o;
    o["top"] = g.top;
    o["bottom"] = g.bottom;
    Json in = Json::array();
    for (const auto& e : g.interior) {
        in.push_back({{"from", e.from}, {"to", e.to}, {"dir", e.dir == Direction::up ? "up" : "down"}});
    }
    o["interior"] = in;
    return o;
}

inline StOuterplanarGraph st_from_json(const Json& j) {
    StOuterplanarGraph g;
    for (const char* key : {"top", "bottom"}) {
        const Json& path = detail::field(j, key);
        if (!path.is_array()) {
            throw ParseError(std::string("'") + key + "' must be an array");
        }
        for (const auto& v : path) {
            (key[0] == 't' ? g.top : g.bottom).push_back(detail::as_string(v, "vertex"));
        }
    }
    if (j.contains("interior")) {
        for (const auto& e : j.at("interior")) {
            std::string dir = detail::as_string(detail::field(e, "dir"), "dir");
            if (dir != "up" && dir != "down") {
                throw ParseError("'dir' must be \"up\" or \"down\"");
            }
            g.interior.push_back({detail::as_string(detail::field(e, "from"), "from"),
                                  detail::as_string(detail::field(e, "to"), "to"),
                                  dir == "up" ? Direction::up : Direction::down});
        }
    }
    return g;
}

// QuadSet: {"m": m, "points": PointSet, "squares": [{"lo", "hi", side index arrays}]}

inline Json to_json(const QuadSet& q) {
    Json o;
    o["m"] = q.m;
    o["points"] = to_json(q.points);
    Json sq = Json::array();
    for (const auto& s : q.squares) {
        sq.push_back({{"lo", s.iv.lo},
                      {"hi", s.iv.hi},
                      {"bottom", s.bottom},
                      {"top", s.top},
                      {"left", s.left},
                      {"right", s.right},
                      {"green", s.green},
                      {"yellow", s.yellow}});
    }
    o["squares"] = sq;
    return o;
}

inline PointSet parse_pointset(const std::string& text) {
    return detail::parse_guard(text, [](const Json& j) {
        // a QuadSet document is accepted as its point set
        return pointset_from_json(j.is_object() && j.contains("points") ? j.at("points") : j);
    });
}
inline Dag parse_dag(const std::string& text) {
    return detail::parse_guard(text, [](const Json& j) { return dag_from_json(j); });
}
inline Drawing parse_drawing(const std::string& text) {
    return detail::parse_guard(text, [](const Json& j) { return drawing_from_json(j); });
}
inline StOuterplanarGraph parse_st_outerplanar(const std::string& text) {
    return detail::parse_guard(text, [](const Json& j) { return st_from_json(j); });
}

} // namespace superpat
