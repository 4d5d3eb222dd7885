#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/reductions/gadget.hpp"

namespace mwdp {

struct HypergraphReduction {
  Instance instance;
  /// h is 2-colorable iff the optimum of `instance` is at least this.
  Rational threshold;
  GadgetReport report;
};

/// Oriented instance deciding 2-colorability of a linear 3-uniform
/// hypergraph. Requires m to violate (a) with max(m11,m22) < max(m12,m21).
inline HypergraphReduction hypergraph_to_mwop(const Hypergraph3& h,
                                              const Matrix2x2& m) {
  edge_indices(h);
  if (!is_linear(h))
    throw Error(ErrorCode::NotLinear, "hypergraph has overlapping edges");
  if (m.property_a() || !(max(m.m11, m.m22) < max(m.m12, m.m21)))
    throw Error(ErrorCode::HypothesisViolated,
                "matrix must violate (a) and have max(m11,m22) < max(m12,m21)");

  // Build with n11 > n22; emitting m instead of n mirrors every partition.
  const Matrix2x2 n = m.m22 > m.m11 ? m.side_swapped() : m;
  const Rational edges(static_cast<std::int64_t>(h.edges.size()));

  detail::GadgetBuilder b;
  b.data.kind = Kind::Oriented;
  b.data.vertices = h.vertices;
  b.data.family = {{"M", n}};
  for (const auto& e : h.edges) {
    b.arc(e[0], e[1], Rational(1), "M", false);
    b.arc(e[1], e[2], Rational(1), "M", false);
    b.arc(e[2], e[0], Rational(1), "M", false);
  }

  GadgetReport report;
  Rational threshold;
  if (n.m11 == n.m22) {
    report.s = {3 * n.m22, n.m22 + n.m12 + n.m21, n.m11 + n.m12 + n.m21, 3 * n.m11};
    threshold = edges * (n.m11 + n.m12 + n.m21);
  } else {
    std::set<std::string> used(h.vertices.begin(), h.vertices.end());
    const std::string x = detail::fresh_name(used, "x");
    const std::string y = detail::fresh_name(used, "y");

    InstanceData g;
    g.kind = Kind::Oriented;
    g.family = {{"M", n}};
    g.vertices = {x, y};
    if (n.m12 > n.m21) {
      g.arcs = {{x, y, Rational(1), "M"}};
    } else if (n.m21 > n.m12) {
      g.arcs = {{y, x, Rational(1), "M"}};
    } else {
      const std::string z = detail::fresh_name(used, "z");
      g.vertices.push_back(z);
      g.arcs = {{x, y, Rational(2), "M"}, {y, z, Rational(2), "M"}, {z, x, Rational(1), "M"}};
    }
    const detail::GadgetAnalysis ga = detail::analyze_gadget(Instance(g), {x}, {y});

    const Rational m_star = max(n.m12, n.m21);
    const Rational theta = (n.m11 - n.m22) / (m_star - n.m11);
    std::map<std::string, std::int64_t> degree;
    for (const auto& e : h.edges)
      for (const auto& v : e) ++degree[v];

    b.data.vertices.insert(b.data.vertices.end(), g.vertices.begin(), g.vertices.end());
    for (const auto& a : g.arcs) b.arc(a.tail, a.head, a.cost, "M", true);
    for (const auto& v : h.vertices) {
      const Rational c = theta * Rational(degree[v]);
      if (n.m12 > n.m21)
        b.arc(x, v, c, "M", false);
      else
        b.arc(v, x, c, "M", false);
    }

    const Rational k = b.free_range() / ga.gap + Rational(1);
    b.scale_gadgets(k);

    report.s = {3 * n.m22 + 3 * theta * m_star,
                n.m22 + n.m12 + n.m21 + theta * (n.m11 + 2 * m_star),
                n.m11 + n.m12 + n.m21 + theta * (2 * n.m11 + m_star),
                3 * n.m11 + 3 * theta * n.m11};
    report.epsilon_or_theta = theta;
    report.K = k;
    report.base_weight = k * ga.best;
    threshold = report.base_weight + edges * report.s[1];
  }

  b.data.family = {{"M", m}};
  return HypergraphReduction{Instance(b.data), threshold, report};
}

}  // namespace mwdp
