#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/reductions/gadget.hpp"

namespace mwdp {

struct MaxcutReduction {
  Instance instance;
  GadgetReport report;
  /// The graph's vertices come first in `instance`; removing them leaves
  /// one small component per edge.
  std::size_t graph_vertices = 0;
  /// Which forcing gadget was used (1-4 for bc, 1-2 for ba).
  int gadget_case = 0;
};

namespace detail {

enum class MaxcutVariant { BC, BA };

struct GadgetArc {
  std::size_t tail;
  std::size_t head;
  const char* matrix;
};

/// Local vertex slots 0..3 are x, x', y, y'; the rest are internal.
struct GadgetShape {
  std::vector<std::string> names;
  std::vector<GadgetArc> arcs;
};

inline GadgetShape bc_gadget(int kase) {
  switch (kase) {
    case 1:
      return {{"x", "x'", "y", "y'", "x''", "y''"},
              {{0, 1, "M"}, {1, 4, "M"}, {4, 0, "M"}, {2, 3, "R"}, {3, 5, "R"}, {5, 2, "R"}}};
    case 2:
      return {{"x", "x'", "y", "y'", "x2", "x3", "y2", "y3"},
              {{0, 4, "M"}, {0, 5, "M"}, {1, 4, "M"}, {1, 5, "M"}, {4, 5, "R"},
               {2, 6, "R"}, {2, 7, "R"}, {3, 6, "R"}, {3, 7, "R"}, {6, 7, "M"}}};
    default:
      return {{"x", "x'", "y", "y'", "z"},
              {{0, 1, "M"}, {1, 4, "M"}, {4, 0, "M"}, {2, 3, "R"}, {3, 4, "R"}, {4, 2, "R"}}};
  }
}

inline GadgetShape ba_gadget(bool forward) {
  if (forward) return {{"x", "x'", "y", "y'"}, {{0, 2, "R"}, {1, 3, "R"}}};
  return {{"x", "x'", "y", "y'"}, {{2, 0, "R"}, {3, 1, "R"}}};
}

inline bool only_b(const Matrix2x2& m) {
  return m.property_b() && !m.property_a() && !m.property_c();
}

inline MaxcutReduction maxcut_to_mwop(const Graph& graph, const Matrix2x2& m,
                                      const Matrix2x2& r, MaxcutVariant variant) {
  const auto edges = edge_indices(graph);

  bool direct, mirrored;
  if (variant == MaxcutVariant::BC) {
    direct = only_b(m) && r.property_c() && !r.property_b();
    mirrored = only_b(m.side_swapped()) && r.property_b() && !r.property_c();
  } else {
    const bool r_only_a = r.property_a() && !r.property_b() && !r.property_c();
    direct = only_b(m) && r_only_a;
    mirrored = only_b(m.side_swapped()) && r_only_a;
  }
  if (!direct && !mirrored)
    throw Error(ErrorCode::HypothesisViolated,
                variant == MaxcutVariant::BC
                    ? "need m with only (b) and r with (c) but not (b), or the mirror"
                    : "need m with only (b) and r with only (a), or the mirror");
  // Build with the (b)-side orientation; emitting m, r afterwards mirrors
  // every partition.
  const Matrix2x2 n = direct ? m : m.side_swapped();
  const Matrix2x2 q = direct ? r : r.side_swapped();

  int kase;
  GadgetShape shape;
  Rational eps;
  const Rational q_star = max(q.m12, q.m21);
  if (variant == MaxcutVariant::BC) {
    const bool m_tri = n.m11 == n.m12 && n.m12 == n.m21;
    const bool r_tri = q.m22 == q.m12 && q.m12 == q.m21;
    kase = !m_tri ? (!r_tri ? 1 : 3) : (r_tri ? 2 : 4);
    shape = bc_gadget(kase);
    eps = (n.m11 - n.m22) / (q.m22 - q.m11);
  } else {
    kase = q.m12 > q.m21 ? 1 : 2;
    shape = ba_gadget(kase == 1);
    eps = (n.m11 - n.m22) / (q_star - q.m11);
  }

  InstanceData lone;
  lone.kind = Kind::Oriented;
  lone.family = {{"M", n}, {"R", q}};
  lone.vertices = shape.names;
  for (const auto& a : shape.arcs)
    lone.arcs.push_back({shape.names[a.tail], shape.names[a.head], Rational(1), a.matrix});
  const GadgetAnalysis ga =
      analyze_gadget(Instance(lone), {"x", "x'"}, {"y", "y'"});

  GadgetBuilder b;
  b.data.kind = Kind::Oriented;
  b.data.vertices = graph.vertices;
  b.data.family = lone.family;
  std::set<std::string> used(graph.vertices.begin(), graph.vertices.end());
  const Rational half(1, 2);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string u = graph.vertices[edges[i].first];
    std::string v = graph.vertices[edges[i].second];
    if (v < u) std::swap(u, v);

    std::vector<std::string> local;
    for (const auto& name : shape.names)
      local.push_back(fresh_name(used, "e" + std::to_string(i) + "." + name));
    b.data.vertices.insert(b.data.vertices.end(), local.begin(), local.end());
    const std::string &x = local[0], &xp = local[1], &y = local[2], &yp = local[3];

    b.arc(u, v, Rational(1), "M", false);
    for (const auto& a : shape.arcs)
      b.arc(local[a.tail], local[a.head], Rational(1), a.matrix, true);
    if (variant == MaxcutVariant::BC) {
      b.arc(u, x, eps, "R", false);
      b.arc(x, v, eps, "R", false);
      b.arc(v, y, eps, "R", false);
      b.arc(y, u, eps, "R", false);
    } else if (kase == 1) {
      b.arc(x, u, eps, "R", false);
      b.arc(x, v, eps, "R", false);
    } else {
      b.arc(u, x, eps, "R", false);
      b.arc(v, x, eps, "R", false);
    }
    b.arc(v, xp, half, "M", false);
    b.arc(xp, u, half, "M", false);
    b.arc(v, yp, half, "M", false);
    b.arc(yp, u, half, "M", false);
  }

  const Rational k = b.free_range() / ga.gap + Rational(1);
  b.scale_gadgets(k);

  GadgetReport report;
  const Rational cross = n.m12 + n.m21;
  const Rational diag = n.m11 + n.m22;
  if (variant == MaxcutVariant::BC) {
    const Rational all_r = q.m11 + q.m22 + q.m12 + q.m21;
    report.s = {n.m11 + (2 * n.m11 + cross) / 2 + eps * (2 * q.m11 + q.m12 + q.m21),
                n.m22 + (2 * n.m22 + cross) / 2 + eps * (2 * q.m22 + q.m12 + q.m21),
                n.m12 + (2 * n.m21 + diag) / 2 + eps * all_r,
                n.m21 + (2 * n.m12 + diag) / 2 + eps * all_r};
  } else {
    report.s = {n.m11 + (2 * n.m11 + cross) / 2 + eps * 2 * q.m11,
                n.m22 + (2 * n.m22 + cross) / 2 + eps * 2 * q_star,
                n.m12 + (2 * n.m21 + diag) / 2 + eps * (q_star + q.m11),
                n.m21 + (2 * n.m12 + diag) / 2 + eps * (q_star + q.m11)};
  }
  report.epsilon_or_theta = eps;
  report.K = k;
  report.base_weight =
      Rational(static_cast<std::int64_t>(edges.size())) * k * ga.best;

  b.data.family = {{"M", m}, {"R", r}};
  return MaxcutReduction{Instance(b.data), report, graph.vertices.size(), kase};
}

}  // namespace detail

/// MaxCut reduction for m with (b) only and r with (c) but not (b), or the
/// mirrored pair.
inline MaxcutReduction maxcut_to_mwop_bc(const Graph& g, const Matrix2x2& m,
                                         const Matrix2x2& r) {
  return detail::maxcut_to_mwop(g, m, r, detail::MaxcutVariant::BC);
}

/// MaxCut reduction for m with (b) only and r with (a) only, or the mirrored
/// pair.
inline MaxcutReduction maxcut_to_mwop_ba(const Graph& g, const Matrix2x2& m,
                                         const Matrix2x2& r) {
  return detail::maxcut_to_mwop(g, m, r, detail::MaxcutVariant::BA);
}

/// Maximum cut size implied by the optimum of an emitted instance.
inline std::int64_t recover_maxcut(const Rational& opt, const GadgetReport& report,
                                   std::int64_t num_edges) {
  const Rational per_cut = report.s[2] - report.s[0];
  const Rational cut =
      (opt - report.base_weight - Rational(num_edges) * report.s[0]) / per_cut;
  const auto value = cut.as_int64();
  if (!value || *value < 0 || *value > num_edges)
    throw Error(ErrorCode::NonIntegralRecovery,
                "optimum " + opt.str() + " does not correspond to a cut size (got " +
                    cut.str() + ")");
  return *value;
}

}  // namespace mwdp
