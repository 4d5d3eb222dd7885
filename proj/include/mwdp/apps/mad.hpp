#pragma once

#include <set>
#include <string>
#include <vector>

#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/solve_poly.hpp"

namespace mwdp {

/// Instance for "is mad(G) > k": G's edges oriented from the smaller id with
/// M2 = [[0,0],[0,2]], plus a pendant arc u -> u' with M1 = [[k,0],[0,0]]
/// for each vertex. Pendant vertices follow the graph's vertices in order.
inline Instance mad_instance(const Graph& g, const Rational& k) {
  if (k.sign() < 0) throw Error(ErrorCode::NegativeK, "k must be nonnegative");
  const auto edges = edge_indices(g);
  InstanceData d;
  d.kind = Kind::Oriented;
  d.vertices = g.vertices;
  d.family = {{"M1", {k, Rational(0), Rational(0), Rational(0)}},
              {"M2", {Rational(0), Rational(0), Rational(0), Rational(2)}}};
  for (const auto& [a, b] : edges) {
    const std::string& u = g.vertices[a];
    const std::string& v = g.vertices[b];
    if (u < v)
      d.arcs.push_back({u, v, Rational(1), "M2"});
    else
      d.arcs.push_back({v, u, Rational(1), "M2"});
  }
  std::set<std::string> used(g.vertices.begin(), g.vertices.end());
  for (const auto& u : g.vertices) {
    const std::string pendant = detail::fresh_name(used, u + "'");
    d.vertices.push_back(pendant);
    d.arcs.push_back({u, pendant, Rational(1), "M1"});
  }
  return Instance(d);
}

struct MadDecision {
  bool answer = false;
  /// Vertices of a subgraph with average degree above k when answer is true.
  std::vector<std::string> witness;
};

inline MadDecision mad_decide(const Graph& g, const Rational& k) {
  const Instance inst = mad_instance(g, k);
  const std::size_t n = g.vertices.size();
  Solution s = solve_mincut(inst);
  // Moving each pendant to its vertex's side never lowers the weight.
  for (std::size_t u = 0; u < n; ++u) s.partition.set(n + u, s.partition.side(u));

  MadDecision out;
  out.answer = s.weight > k * Rational(static_cast<std::int64_t>(n));
  if (out.answer)
    for (std::size_t u = 0; u < n; ++u)
      if (s.partition.side(u) == Side::X2) out.witness.push_back(g.vertices[u]);
  return out;
}

struct MadResult {
  Rational mad;
  std::vector<std::string> witness;
};

namespace detail {

inline Rational density(const Graph& g, const std::vector<std::string>& w) {
  std::set<std::string> in(w.begin(), w.end());
  std::int64_t inside = 0;
  for (const auto& [u, v] : g.edges) inside += in.count(u) && in.count(v);
  return Rational(2 * inside) / Rational(static_cast<std::int64_t>(w.size()));
}

}  // namespace detail

/// Maximum average degree over all subgraphs, by repeatedly asking
/// mad_decide at the density of the best subgraph found so far.
inline MadResult mad_exact(const Graph& g) {
  edge_indices(g);
  if (g.edges.empty()) throw Error(ErrorCode::NoEdges, "graph has no edges");
  MadResult best{detail::density(g, g.vertices), g.vertices};
  for (;;) {
    MadDecision d = mad_decide(g, best.mad);
    if (!d.answer) return best;
    Rational next = detail::density(g, d.witness);
    if (!(next > best.mad))
      throw Error(ErrorCode::Internal, "mad iteration did not improve");
    best = MadResult{next, std::move(d.witness)};
  }
}

}  // namespace mwdp
