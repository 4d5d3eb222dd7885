#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mwdp/error.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/maxflow.hpp"
#include "mwdp/rational.hpp"

namespace mwdp {

/// Undirected weighted graph H on V(D) + {s, t} whose minimum (s,t)-cut
/// yields a maximum-weight partition of a Property-(a) instance.
///
/// Vertices 0..n-1 are the instance's vertices in declaration order, n is the
/// source s and n+1 the sink t. Parallel contributions are merged, so H is a
/// simple graph keyed by (smaller index, larger index).
struct CutGraph {
  std::size_t num_original = 0;
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, std::size_t>, Rational> weight;
  /// Smallest weight over all edges of H before shifting.
  Rational theta;

  std::size_t source() const { return num_original; }
  std::size_t sink() const { return num_original + 1; }
  std::size_t num_vertices() const { return num_original + 2; }

  bool is_terminal_edge(const std::pair<std::size_t, std::size_t>& e) const {
    return e.second >= num_original;
  }

  /// w*: terminal edges are shifted down by theta, all others unchanged.
  Rational shifted(const std::pair<std::size_t, std::size_t>& e) const {
    const Rational& w = weight.at(e);
    return is_terminal_edge(e) ? w - theta : w;
  }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> edge_key(std::size_t u,
                                                    std::size_t v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

inline std::string unused_name(const Instance& inst, std::string name) {
  while (inst.has_vertex(name)) name = "_" + name;
  return name;
}

}  // namespace detail

/// Builds H from a Property-(a) instance. Every arc uv with matrix M and cost
/// c contributes c(m11+m22-m12-m21)/2 to uv, -c*m22/2 to su and sv,
/// c(m21-m11-m12)/2 to tu and c(m12-m11-m21)/2 to tv.
inline CutGraph build_cut_graph(const Instance& inst) {
  for (const auto& [id, m] : inst.family())
    if (!m.property_a())
      throw Error(ErrorCode::PreconditionViolated,
                  "matrix '" + id + "' violates property (a)");

  CutGraph g;
  const std::size_t n = inst.num_vertices();
  g.num_original = n;
  g.names = inst.vertices();
  g.names.push_back(detail::unused_name(inst, "s"));
  g.names.push_back(detail::unused_name(inst, "t"));

  const std::size_t s = g.source(), t = g.sink();
  for (std::size_t u = 0; u < n; ++u) {
    g.weight[{u, s}] = Rational(0);
    g.weight[{u, t}] = Rational(0);
  }

  // Per matrix: the uv, s and t coefficients, each already halved.
  const Rational half(Integer(1), Integer(2));
  std::vector<std::array<Rational, 4>> coef;
  coef.reserve(inst.family().size());
  for (const auto& [id, m] : inst.family())
    coef.push_back({(m.m11 + m.m22 - m.m12 - m.m21) * half, -m.m22 * half,
                    (m.m21 - m.m11 - m.m12) * half, (m.m12 - m.m11 - m.m21) * half});

  for (const Arc& a : inst.arcs()) {
    const auto& k = coef[a.matrix];
    const Rational to_s = a.cost * k[1];
    g.weight[detail::edge_key(a.tail, a.head)] += a.cost * k[0];
    g.weight[{a.tail, s}] += to_s;
    g.weight[{a.head, s}] += to_s;
    g.weight[{a.tail, t}] += a.cost * k[2];
    g.weight[{a.head, t}] += a.cost * k[3];
  }

  bool first = true;
  for (const auto& [e, w] : g.weight) {
    if (first || w < g.theta) g.theta = w;
    first = false;
  }
  return g;
}

/// w-weight (or w*-weight when `shifted`) of the cut whose source side is
/// given; source_side must contain s and not t.
inline Rational cut_weight(const CutGraph& g, const std::vector<bool>& source_side,
                           bool shifted) {
  Rational total;
  for (const auto& [e, w] : g.weight) {
    if (source_side[e.first] != source_side[e.second])
      total += shifted ? g.shifted(e) : w;
  }
  return total;
}

struct MinCut {
  Rational value;
  /// Indexed like CutGraph vertices; true on the source side.
  std::vector<bool> source_side;
};

/// Minimum (s,t)-cut under w*. Capacities are scaled by the lcm of their
/// denominators so the flow runs on integers; the returned side is the set
/// reachable from s in the final residual network.
inline MinCut min_st_cut(const CutGraph& g) {
  Integer scale(1);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> star;
  star.reserve(g.weight.size());
  for (const auto& [e, w] : g.weight) {
    Rational ws = g.shifted(e);
    if (ws.sign() < 0)
      throw Error(ErrorCode::Internal, "negative shifted weight in cut graph");
    scale = lcm(scale, ws.denominator());
    star.emplace_back(e, std::move(ws));
  }

  FlowNetwork<Integer> net(g.num_vertices());
  for (const auto& [e, ws] : star) {
    Integer cap = ws.numerator() * (scale / ws.denominator());
    if (cap != 0) net.add_undirected(e.first, e.second, cap);
  }
  Integer flow = net.max_flow(g.source(), g.sink());

  MinCut out;
  out.source_side = net.source_side(g.source());
  out.value = Rational(flow, scale);
  if (out.source_side[g.sink()])
    throw Error(ErrorCode::Internal, "sink reachable after max flow");
  if (cut_weight(g, out.source_side, true) != out.value)
    throw Error(ErrorCode::Internal, "max flow and min cut values differ");
  return out;
}

}  // namespace mwdp
