#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mwdp/error.hpp"
#include "mwdp/rational.hpp"

namespace mwdp {

/// Simple undirected graph; edges are unordered pairs of distinct vertices.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// 3-uniform hypergraph.
struct Hypergraph3 {
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
};

struct WeightedArc {
  std::string tail;
  std::string head;
  Rational w{1};
};

struct WeightedDigraph {
  std::vector<std::string> vertices;
  std::vector<WeightedArc> arcs;
};

struct ColoredEdge {
  std::string u;
  std::string v;
  int color = 1;
  Rational w{1};
};

struct ColoredGraph {
  std::vector<std::string> vertices;
  std::vector<ColoredEdge> edges;
};

namespace detail {

inline std::unordered_map<std::string, std::size_t> index_vertices(
    const std::vector<std::string>& vertices) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i], i).second)
      throw Error(ErrorCode::DuplicateVertex,
                  "duplicate vertex '" + vertices[i] + "'");
  return index;
}

inline std::size_t lookup(const std::unordered_map<std::string, std::size_t>& index,
                          const std::string& id, const std::string& where) {
  auto it = index.find(id);
  if (it == index.end())
    throw Error(ErrorCode::UnknownVertex,
                where + ": unknown vertex '" + id + "'");
  return it->second;
}

/// Validates an undirected edge list and returns it as index pairs.
template <typename EdgeRange, typename Endpoints>
std::vector<std::pair<std::size_t, std::size_t>> undirected_indices(
    const std::vector<std::string>& vertices, const EdgeRange& edges,
    Endpoints endpoints) {
  auto index = index_vertices(vertices);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : edges) {
    const auto [a, b] = endpoints(e);
    const std::string where = "edge " + a + "-" + b;
    std::size_t u = lookup(index, a, where);
    std::size_t v = lookup(index, b, where);
    if (u == v) throw Error(ErrorCode::SelfLoop, where + ": self-loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw Error(ErrorCode::DuplicateArc, where + ": duplicate edge");
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace detail

inline std::vector<std::pair<std::size_t, std::size_t>> edge_indices(const Graph& g) {
  return detail::undirected_indices(g.vertices, g.edges, [](const auto& e) {
    return std::pair<std::string, std::string>(e.first, e.second);
  });
}

inline std::vector<std::pair<std::size_t, std::size_t>> edge_indices(
    const ColoredGraph& g) {
  auto out = detail::undirected_indices(g.vertices, g.edges, [](const ColoredEdge& e) {
    return std::pair<std::string, std::string>(e.u, e.v);
  });
  for (const ColoredEdge& e : g.edges) {
    if (e.color != 1 && e.color != 2)
      throw Error(ErrorCode::BadColor, "edge " + e.u + "-" + e.v + ": color " +
                                           std::to_string(e.color) +
                                           " is not 1 or 2");
    if (e.w.sign() < 0)
      throw Error(ErrorCode::NegativeWeight,
                  "edge " + e.u + "-" + e.v + ": negative weight");
  }
  return out;
}

/// Validates arcs (no self-loops, no repeated ordered pair, weights >= 0).
inline std::vector<std::pair<std::size_t, std::size_t>> arc_indices(
    const WeightedDigraph& d) {
  auto index = detail::index_vertices(d.vertices);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const WeightedArc& a : d.arcs) {
    const std::string where = "arc " + a.tail + "->" + a.head;
    std::size_t u = detail::lookup(index, a.tail, where);
    std::size_t v = detail::lookup(index, a.head, where);
    if (u == v) throw Error(ErrorCode::SelfLoop, where + ": self-loop");
    if (!seen.insert({u, v}).second)
      throw Error(ErrorCode::DuplicateArc, where + ": duplicate arc");
    if (a.w.sign() < 0)
      throw Error(ErrorCode::NegativeWeight, where + ": negative weight");
    out.emplace_back(u, v);
  }
  return out;
}

/// Validates a hypergraph: known vertices, three distinct per edge, no
/// repeated edge. Returns sorted index triples.
inline std::vector<std::array<std::size_t, 3>> edge_indices(const Hypergraph3& h) {
  auto index = detail::index_vertices(h.vertices);
  std::set<std::array<std::size_t, 3>> seen;
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& e : h.edges) {
    const std::string where = "hyperedge {" + e[0] + "," + e[1] + "," + e[2] + "}";
    std::array<std::size_t, 3> t{};
    for (std::size_t k = 0; k < 3; ++k) t[k] = detail::lookup(index, e[k], where);
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      throw Error(ErrorCode::BadHyperedge, where + ": vertices are not distinct");
    if (!seen.insert(t).second)
      throw Error(ErrorCode::BadHyperedge, where + ": duplicate hyperedge");
    out.push_back(t);
  }
  return out;
}

/// No two edges share two or more vertices.
inline bool is_linear(const Hypergraph3& h) {
  auto edges = edge_indices(h);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      int shared = 0;
      for (std::size_t a : edges[i])
        for (std::size_t b : edges[j]) shared += a == b;
      if (shared >= 2) return false;
    }
  return true;
}

namespace detail {

/// Returns `base`, prefixed with underscores until it is not in `used`, and
/// records it.
inline std::string fresh_name(std::set<std::string>& used, std::string base) {
  while (used.count(base)) base = "_" + base;
  used.insert(base);
  return base;
}

}  // namespace detail

}  // namespace mwdp
