#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "mwdp/apps/game.hpp"
#include "mwdp/classify.hpp"
#include "mwdp/cut_graph.hpp"
#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/reductions/gadget.hpp"
#include "mwdp/solution.hpp"

namespace mwdp::io {

using Json = nlohmann::ordered_json;

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "file not found: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, "invalid JSON: " + std::string(e.what()));
  }
}

inline void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << j.dump(2) << '\n';
}

// ---- scalars -------------------------------------------------------------

/// Integers, decimal or "p/q" strings, and JSON floats (read through their
/// shortest decimal form).
inline Rational to_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>(),
                                   std::chars_format::fixed);
    if (ec != std::errc{})
      throw Error(ErrorCode::Parse, where + ": number out of range");
    return Rational::parse(std::string_view(buf, static_cast<std::size_t>(end - buf)));
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, where + ": " + e.what());
    }
  }
  throw Error(ErrorCode::Parse, where + ": expected a number or rational string");
}

inline Json from_rational(const Rational& r) {
  if (auto v = r.as_int64()) return *v;
  return r.str();
}

inline std::string to_id(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, where + ": expected a string id");
  return j.get<std::string>();
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::Parse, where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::vector<std::string> to_ids(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(to_id(x, where));
  return out;
}

inline Matrix2x2 to_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw Error(ErrorCode::Parse, where + ": expected [[r,r],[r,r]]");
  return {to_rational(j[0][0], where), to_rational(j[0][1], where),
          to_rational(j[1][0], where), to_rational(j[1][1], where)};
}

/// Matrix given on the command line, e.g. "[[0,1],[1,0]]".
inline Matrix2x2 parse_matrix(const std::string& text, const std::string& where) {
  try {
    return to_matrix(Json::parse(text), where);
  } catch (const Json::parse_error&) {
    throw Error(ErrorCode::Parse, where + ": expected [[r,r],[r,r]]");
  }
}

inline Json from_matrix(const Matrix2x2& m) {
  return Json::array({Json::array({from_rational(m.m11), from_rational(m.m12)}),
                      Json::array({from_rational(m.m21), from_rational(m.m22)})});
}

// ---- instances -----------------------------------------------------------

inline InstanceData to_instance_data(const Json& j) {
  InstanceData d;
  if (!j.is_object()) throw Error(ErrorCode::Parse, "instance must be a JSON object");
  const std::string kind = j.value("kind", std::string("general"));
  if (kind == "general")
    d.kind = Kind::General;
  else if (kind == "oriented")
    d.kind = Kind::Oriented;
  else if (kind == "symmetric")
    d.kind = Kind::Symmetric;
  else
    throw Error(ErrorCode::Parse, "unknown kind '" + kind + "'");

  const Json& matrices = field(j, "matrices", "instance");
  if (!matrices.is_object())
    throw Error(ErrorCode::Parse, "\"matrices\" must be an object");
  for (const auto& [id, m] : matrices.items())
    d.family.emplace_back(id, to_matrix(m, "matrix " + id));
  d.vertices = to_ids(field(j, "vertices", "instance"), "vertices");

  const Json& arcs = field(j, "arcs", "instance");
  if (!arcs.is_array()) throw Error(ErrorCode::Parse, "\"arcs\" must be an array");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "arcs[" + std::to_string(i) + "]";
    const Json& a = arcs[i];
    ArcSpec arc;
    arc.tail = to_id(field(a, "tail", where), where);
    arc.head = to_id(field(a, "head", where), where);
    arc.cost = a.contains("c") ? to_rational(a.at("c"), where) : Rational(1);
    arc.matrix = to_id(field(a, "matrix", where), where);
    d.arcs.push_back(std::move(arc));
  }
  return d;
}

inline Instance to_instance(const Json& j) { return Instance(to_instance_data(j)); }

inline Json from_instance(const Instance& inst) {
  const InstanceData& d = inst.data();
  Json j;
  j["kind"] = to_string(d.kind);
  Json matrices = Json::object();
  for (const auto& [id, m] : d.family) matrices[id] = from_matrix(m);
  j["matrices"] = std::move(matrices);
  j["vertices"] = d.vertices;
  Json arcs = Json::array();
  for (const ArcSpec& a : d.arcs)
    arcs.push_back(Json{{"tail", a.tail}, {"head", a.head}, {"c", from_rational(a.cost)},
                        {"matrix", a.matrix}});
  j["arcs"] = std::move(arcs);
  return j;
}

// ---- graphs --------------------------------------------------------------

inline Graph to_graph(const Json& j) {
  Graph g;
  g.vertices = to_ids(field(j, "vertices", "graph"), "vertices");
  const Json& edges = field(j, "edges", "graph");
  if (!edges.is_array()) throw Error(ErrorCode::Parse, "\"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2)
      throw Error(ErrorCode::Parse, where + ": expected [u, v]");
    g.edges.emplace_back(to_id(edges[i][0], where), to_id(edges[i][1], where));
  }
  edge_indices(g);
  return g;
}

inline Hypergraph3 to_hypergraph(const Json& j) {
  Hypergraph3 h;
  h.vertices = to_ids(field(j, "vertices", "hypergraph"), "vertices");
  const Json& edges = field(j, "edges", "hypergraph");
  if (!edges.is_array()) throw Error(ErrorCode::Parse, "\"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 3)
      throw Error(ErrorCode::BadHyperedge, where + ": expected three vertices");
    h.edges.push_back({to_id(edges[i][0], where), to_id(edges[i][1], where),
                       to_id(edges[i][2], where)});
  }
  edge_indices(h);
  return h;
}

inline Json from_hypergraph(const Hypergraph3& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges) edges.push_back(Json::array({e[0], e[1], e[2]}));
  return Json{{"vertices", h.vertices}, {"edges", std::move(edges)}};
}

inline WeightedDigraph to_digraph(const Json& j) {
  WeightedDigraph d;
  d.vertices = to_ids(field(j, "vertices", "digraph"), "vertices");
  const Json& arcs = field(j, "arcs", "digraph");
  if (!arcs.is_array()) throw Error(ErrorCode::Parse, "\"arcs\" must be an array");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "arcs[" + std::to_string(i) + "]";
    WeightedArc a;
    a.tail = to_id(field(arcs[i], "tail", where), where);
    a.head = to_id(field(arcs[i], "head", where), where);
    if (arcs[i].contains("w")) a.w = to_rational(arcs[i].at("w"), where);
    d.arcs.push_back(std::move(a));
  }
  arc_indices(d);
  return d;
}

inline ColoredGraph to_colored_graph(const Json& j) {
  ColoredGraph g;
  g.vertices = to_ids(field(j, "vertices", "colored graph"), "vertices");
  const Json& edges = field(j, "edges", "colored graph");
  if (!edges.is_array()) throw Error(ErrorCode::Parse, "\"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    ColoredEdge c;
    c.u = to_id(field(e, "u", where), where);
    c.v = to_id(field(e, "v", where), where);
    const Json& color = field(e, "color", where);
    if (!color.is_number_integer())
      throw Error(ErrorCode::BadColor, where + ": color must be 1 or 2");
    c.color = color.get<int>();
    if (e.contains("w")) c.w = to_rational(e.at("w"), where);
    g.edges.push_back(std::move(c));
  }
  edge_indices(g);
  return g;
}

/// Payoff keys are "i->j"; importance keys are "i-j".
inline PolymatrixGame to_game(const Json& j) {
  PolymatrixGame g;
  g.players = to_ids(field(j, "players", "game"), "players");
  Graph base = to_graph(Json{{"vertices", g.players}, {"edges", field(j, "edges", "game")}});
  g.edges = base.edges;
  const Json& payoffs = field(j, "payoffs", "game");
  if (!payoffs.is_object()) throw Error(ErrorCode::Parse, "\"payoffs\" must be an object");
  for (const auto& [key, m] : payoffs.items()) {
    const auto arrow = key.find("->");
    if (arrow == std::string::npos)
      throw Error(ErrorCode::Parse, "payoff key '" + key + "' is not of the form i->j");
    g.payoffs[{key.substr(0, arrow), key.substr(arrow + 2)}] =
        to_matrix(m, "payoff " + key);
  }
  if (j.contains("importance")) {
    const Json& imp = j.at("importance");
    if (!imp.is_object())
      throw Error(ErrorCode::Parse, "\"importance\" must be an object");
    for (const auto& [key, r] : imp.items()) {
      std::pair<std::string, std::string> edge;
      bool found = false;
      for (const auto& [a, b] : g.edges) {
        if (key == a + "-" + b || key == b + "-" + a) {
          edge = {a, b};
          found = true;
          break;
        }
      }
      if (!found)
        throw Error(ErrorCode::UnknownVertex, "importance key '" + key + "' is not an edge");
      g.importance[edge] = to_rational(r, "importance " + key);
    }
  }
  detail::validate_game(g);
  return g;
}

// ---- results ---------------------------------------------------------------

inline Json from_ids(const std::vector<std::string>& ids) {
  Json j = Json::array();
  for (const auto& id : ids) j.push_back(id);
  return j;
}

inline Json from_verdict(const Verdict& v) {
  Json per = Json::object();
  for (const auto& [id, p] : v.per_matrix) per[id] = Json{{"a", p.a}, {"b", p.b}, {"c", p.c}};
  Json j;
  j["case"] = to_string(v.kase);
  j["per_matrix"] = std::move(per);
  if (v.witnesses)
    j["witnesses"] = Json{{"a", v.witnesses->violates_a},
                          {"b", v.witnesses->violates_b},
                          {"c", v.witnesses->violates_c}};
  else
    j["witnesses"] = nullptr;
  return j;
}

inline Json from_solution(const Instance& inst, const Solution& s) {
  return Json{{"method", to_string(s.method)},
              {"weight", from_rational(s.weight)},
              {"x1", from_ids(member_ids(inst, s.partition, Side::X1))},
              {"x2", from_ids(member_ids(inst, s.partition, Side::X2))}};
}

inline Json from_cut_graph(const CutGraph& g) {
  Json edges = Json::array();
  for (const auto& [e, w] : g.weight)
    edges.push_back(Json{{"u", g.names[e.first]},
                         {"v", g.names[e.second]},
                         {"w", from_rational(w)},
                         {"w_star", from_rational(g.shifted(e))}});
  return Json{{"vertices", g.names}, {"edges", std::move(edges)},
              {"theta", from_rational(g.theta)}};
}

inline Json from_report(const GadgetReport& r, const char* const names[4],
                        const char* constant) {
  Json j;
  for (int k = 0; k < 4; ++k) j[names[k]] = from_rational(r.s[static_cast<std::size_t>(k)]);
  j[constant] = from_rational(r.epsilon_or_theta);
  j["K"] = from_rational(r.K);
  j["base_weight"] = from_rational(r.base_weight);
  return j;
}

}  // namespace mwdp::io
