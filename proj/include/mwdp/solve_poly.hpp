#pragma once

#include <string>

#include "mwdp/cut_graph.hpp"
#include "mwdp/error.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/solution.hpp"

namespace mwdp {

namespace detail {

inline void require_all(const Instance& inst, bool (Matrix2x2::*pred)() const,
                        const char* name) {
  for (const auto& [id, m] : inst.family())
    if (!(m.*pred)())
      throw Error(ErrorCode::PreconditionViolated,
                  "matrix '" + id + "' violates property (" + name + ")");
}

inline void isolated_to_x1(const Instance& inst, Partition& p) {
  for (std::size_t v = 0; v < inst.num_vertices(); ++v)
    if (inst.is_isolated(v)) p.set(v, Side::X1);
}

}  // namespace detail

/// Every matrix has m11 as a maximum entry: all of V in X1 is optimal.
inline Solution solve_trivial_b(const Instance& inst) {
  detail::require_all(inst, &Matrix2x2::property_b, "b");
  Partition p(inst.num_vertices(), Side::X1);
  Rational w;
  for (const Arc& a : inst.arcs()) w += a.cost * inst.matrix_of(a).m11;
  return Solution{std::move(p), std::move(w), Method::TrivialAllX1};
}

/// Every matrix has m22 as a maximum entry: all of V in X2 is optimal.
/// Isolated vertices still go to X1.
inline Solution solve_trivial_c(const Instance& inst) {
  detail::require_all(inst, &Matrix2x2::property_c, "c");
  Partition p(inst.num_vertices(), Side::X2);
  detail::isolated_to_x1(inst, p);
  Rational w;
  for (const Arc& a : inst.arcs()) w += a.cost * inst.matrix_of(a).m22;
  return Solution{std::move(p), std::move(w), Method::TrivialAllX2};
}

/// Optimal partition for a Property-(a) instance from a minimum (s,t)-cut of
/// the cut graph: X1 is the source side minus s, and the optimum weight is
/// -cut - |V| * theta.
inline Solution solve_mincut(const Instance& inst) {
  CutGraph g = build_cut_graph(inst);
  MinCut cut = min_st_cut(g);

  const std::size_t n = inst.num_vertices();
  Partition p(n);
  for (std::size_t v = 0; v < n; ++v)
    p.set(v, cut.source_side[v] ? Side::X1 : Side::X2);
  detail::isolated_to_x1(inst, p);

  Rational weight = -cut.value - Rational(static_cast<std::int64_t>(n)) * g.theta;
  Rational check = partition_weight(inst, p);
  if (check != weight)
    throw Error(ErrorCode::Internal, "min-cut weight " + weight.str() +
                                         " disagrees with recomputed weight " +
                                         check.str());
  return Solution{std::move(p), std::move(weight), Method::MinCut};
}

}  // namespace mwdp
