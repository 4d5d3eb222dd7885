#pragma once

#include <string>
#include <vector>

#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/solve_exact.hpp"
#include "mwdp/solve_poly.hpp"

namespace mwdp {

namespace detail {

inline Instance colored_instance(const ColoredGraph& g, const Matrix2x2& for_color1,
                                 const Matrix2x2& for_color2) {
  edge_indices(g);
  InstanceData d;
  d.kind = Kind::Oriented;
  d.vertices = g.vertices;
  d.family = {{"M1", for_color1}, {"M2", for_color2}};
  for (const ColoredEdge& e : g.edges) {
    const std::string& id = e.color == 1 ? "M1" : "M2";
    if (e.u < e.v)
      d.arcs.push_back({e.u, e.v, e.w, id});
    else
      d.arcs.push_back({e.v, e.u, e.w, id});
  }
  return Instance(d);
}

}  // namespace detail

/// Color-1 edges score inside X1, color-2 edges inside X2.
inline Instance colorpart_instance(const ColoredGraph& g) {
  return detail::colored_instance(
      g, {Rational(1), Rational(0), Rational(0), Rational(0)},
      {Rational(0), Rational(0), Rational(0), Rational(1)});
}

struct ColorPartResult {
  Partition partition;
  Rational value;
};

/// Maximizes the weight of color-1 edges inside X1 plus color-2 edges
/// inside X2.
inline ColorPartResult two_color_partition(const ColoredGraph& g) {
  Solution s = solve_mincut(colorpart_instance(g));
  return {std::move(s.partition), s.weight};
}

/// Color-2 edges inside X1 score +w, color-1 edges inside X1 score -w.
inline Instance colordiff_instance(const ColoredGraph& g) {
  return detail::colored_instance(
      g, {Rational(-1), Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(0), Rational(0)});
}

struct ColorDiffResult {
  std::vector<std::string> subset;
  Rational value;
};

/// Maximizes w2(X) - w1(X) over vertex sets X, where wi(X) is the weight of
/// color-i edges with both ends in X. Exhaustive; ties go to the smallest X.
inline ColorDiffResult two_color_difference(const ColoredGraph& g,
                                            BruteForceOptions opts = {}) {
  const Instance inst = colordiff_instance(g);
  opts.tie_break = TieBreak::FewestX1;
  Solution s = brute_force(inst, opts);
  return {member_ids(inst, s.partition, Side::X1), s.weight};
}

}  // namespace mwdp
