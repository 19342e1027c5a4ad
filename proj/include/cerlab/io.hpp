#ifndef CERLAB_IO_HPP
#define CERLAB_IO_HPP

#include "error.hpp"
#include "hypergraph.hpp"
#include "linear.hpp"
#include "polyhedron.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace cerlab {

using Json = nlohmann::json;

// Hypergraph files: {"edges":[[..],..],"nodes":[..]} on one line.

inline Json nodeset_to_json(const NodeSet &s) { return Json(s.items()); }

inline Json hypergraph_to_json(const Hypergraph &g)
{
    Json edges = Json::array();
    for (const Edge &e : g.edges())
        edges.push_back(nodeset_to_json(e));
    return Json{{"nodes", nodeset_to_json(g.nodes())}, {"edges", edges}};
}

inline std::string write_hypergraph(const Hypergraph &g) { return hypergraph_to_json(g).dump() + "\n"; }

inline NodeSet nodeset_from_json(const Json &j, const std::string &what)
{
    require(j.is_array(), what + " must be an array of integers");
    std::vector<NodeId> ids;
    for (const auto &x : j) {
        require(x.is_number_integer(), what + " must be an array of integers");
        ids.push_back(x.get<NodeId>());
    }
    NodeSet s(ids);
    require(s.size() == ids.size(), what + " lists a node twice");
    return s;
}

inline Hypergraph hypergraph_from_json(const Json &j)
{
    require(j.is_object() && j.contains("edges"), "hypergraph JSON needs an \"edges\" array");
    const Json &je = j.at("edges");
    require(je.is_array(), "hypergraph JSON needs an \"edges\" array");
    std::vector<Edge> edges;
    for (const auto &e : je)
        edges.push_back(nodeset_from_json(e, "edge"));
    if (!j.contains("nodes"))
        return Hypergraph::from_edges(std::move(edges));
    return Hypergraph(nodeset_from_json(j.at("nodes"), "nodes"), std::move(edges));
}

inline Hypergraph parse_hypergraph(const std::string &text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InvalidArgument(std::string("malformed hypergraph JSON: ") + e.what());
    }
    return hypergraph_from_json(j);
}

/// Canonical files have nodes 0..n-1; edge order is canonical by construction.
inline bool is_canonical(const Hypergraph &g) { return has_dense_labels(g); }

// Polyhedron files:
//   space: <var> ...
//   original: <var> ...
//   <terms> <=|>=|= <rational>     one constraint per line

namespace detail {

inline std::vector<std::string> split_words(const std::string &line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

inline std::string join_vars(const std::vector<Var> &vars)
{
    std::string s;
    for (const Var &v : vars)
        s += " " + v.name();
    return s;
}

inline bool is_sense(const std::string &w) { return w == "<=" || w == ">=" || w == "="; }

} // namespace detail

/// Inverse of LinearInequality::to_string.
inline LinearInequality parse_inequality(const std::string &line)
{
    auto words = detail::split_words(line);
    std::size_t i = 0;
    std::map<Var, Rational> coefs;
    Rational sign = 1;
    bool expect_term = true;
    auto fail = [&](const std::string &why) { throw InvalidArgument("bad constraint '" + line + "': " + why); };
    while (i < words.size() && !detail::is_sense(words[i])) {
        std::string w = words[i];
        if (w == "+" || w == "-") {
            if (expect_term)
                fail("dangling sign");
            sign = w == "-" ? -1 : 1;
            expect_term = true;
            ++i;
            continue;
        }
        if (!expect_term)
            fail("missing sign between terms");
        if (w == "0" && coefs.empty() && i + 1 < words.size() && detail::is_sense(words[i + 1])) {
            ++i;
            expect_term = false;
            continue;
        }
        if (w[0] == '-') {
            if (!coefs.empty() || i != 0)
                fail("sign must be separated from the term");
            sign = -1;
            w = w.substr(1);
        }
        Rational coef = 1;
        if (!w.empty() && (std::isdigit(static_cast<unsigned char>(w[0])))) {
            coef = parse_rational(w);
            if (++i >= words.size())
                fail("coefficient without a variable");
            w = words[i];
        }
        Var v = Var::parse(w);
        if (coefs.count(v))
            fail("variable " + w + " appears twice");
        coefs.emplace(v, sign * coef);
        sign = 1;
        expect_term = false;
        ++i;
    }
    if (expect_term || i + 2 != words.size())
        fail("expected '<terms> <sense> <rhs>'");
    Sense sense = words[i] == "<=" ? Sense::le : words[i] == ">=" ? Sense::ge : Sense::eq;
    return LinearInequality(coefs, sense, parse_rational(words[i + 1]));
}

inline std::string write_polyhedron(const Polyhedron &p)
{
    std::string out = "space:" + detail::join_vars(p.space()) + "\n";
    out += "original:" + detail::join_vars(p.original()) + "\n";
    for (const auto &c : p.constraints())
        out += c.to_string() + "\n";
    return out;
}

inline Polyhedron parse_polyhedron(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<Var> space, original;
    bool have_space = false, have_original = false;
    std::vector<LinearInequality> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto words = detail::split_words(line);
        if (words.empty())
            continue;
        if (words[0] == "space:" || words[0] == "original:") {
            std::vector<Var> &target = words[0] == "space:" ? space : original;
            (words[0] == "space:" ? have_space : have_original) = true;
            for (std::size_t i = 1; i < words.size(); ++i)
                target.push_back(Var::parse(words[i]));
            continue;
        }
        rows.push_back(parse_inequality(line));
    }
    require(have_space, "polyhedron file has no 'space:' line");
    if (!have_original)
        original = space;
    Polyhedron p(space, original);
    for (auto &r : rows)
        p.add(std::move(r));
    return p;
}

// Point files: "space:" line, then one line of rationals per point.

inline std::string write_points(const std::vector<Var> &space, const std::vector<Point> &points)
{
    std::string out = "space:" + detail::join_vars(space) + "\n";
    for (const auto &p : points) {
        std::string line;
        for (const Var &v : space) {
            auto it = p.find(v);
            require(it != p.end(), "point misses coordinate " + v.name());
            line += (line.empty() ? "" : " ") + to_string(it->second);
        }
        out += line + "\n";
    }
    return out;
}

inline Json point_to_json(const Point &p)
{
    Json j = Json::object();
    for (const auto &[v, x] : p)
        j[v.name()] = to_string(x);
    return j;
}

inline Point point_from_json(const Json &j)
{
    require(j.is_object(), "a point is an object of variable names to rationals");
    Point p;
    for (const auto &[name, x] : j.items()) {
        require(x.is_string(), "coordinate " + name + " must be a rational string");
        p[Var::parse(name)] = parse_rational(x.get<std::string>());
    }
    return p;
}

inline Json edges_to_json(const std::vector<Edge> &edges)
{
    Json j = Json::array();
    for (const Edge &e : edges)
        j.push_back(nodeset_to_json(e));
    return j;
}

} // namespace cerlab

#endif
