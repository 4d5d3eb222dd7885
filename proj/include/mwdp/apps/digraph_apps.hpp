#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/solve_exact.hpp"
#include "mwdp/solve_poly.hpp"

namespace mwdp {

namespace detail {

inline Instance weighted_instance(const WeightedDigraph& d, const Matrix2x2& m) {
  arc_indices(d);
  InstanceData data;
  data.vertices = d.vertices;
  data.family = {{"M", m}};
  for (const WeightedArc& a : d.arcs) data.arcs.push_back({a.tail, a.head, a.w, "M"});
  return Instance(data);
}

}  // namespace detail

// ---- balance defect ----------------------------------------------------

/// M' = [[1,2],[0,1]]: forward crossing arcs score 2, backward 0, others 1.
inline Instance balance_instance(const WeightedDigraph& d) {
  return detail::weighted_instance(d, {Rational(1), Rational(2), Rational(0), Rational(1)});
}

/// Sum over vertices of max(0, out-weight - in-weight).
inline Rational excess_sum(const WeightedDigraph& d) {
  arc_indices(d);
  std::map<std::string, Rational> excess;
  for (const WeightedArc& a : d.arcs) {
    excess[a.tail] += a.w;
    excess[a.head] -= a.w;
  }
  Rational total;
  for (const auto& [v, x] : excess)
    if (x.sign() > 0) total += x;
  return total;
}

struct BalanceResult {
  Rational r_plus;
  Partition partition;
};

/// Largest forward-minus-backward cut weight over all bipartitions.
inline BalanceResult balance_defect(const WeightedDigraph& d) {
  const Instance inst = balance_instance(d);
  Solution s = solve_mincut(inst);
  Rational total;
  for (const WeightedArc& a : d.arcs) total += a.w;
  Rational r_plus = s.weight - total;
  if (r_plus != excess_sum(d))
    throw Error(ErrorCode::Internal, "balance defect " + r_plus.str() +
                                         " disagrees with excess sum " +
                                         excess_sum(d).str());
  return {std::move(r_plus), std::move(s.partition)};
}

// ---- minimum (s,t)-cut -------------------------------------------------

struct StCutInstance {
  Instance instance;
  std::int64_t arcs = 0;
};

/// Every arc gets M = [[1,0],[1,1]] and cost 1; new vertices s', t' carry
/// arcs s'->s with [[A,0],[0,0]] and t->t' with [[0,0],[0,A]], A = |A(D)|,
/// each with cost `terminal_cost`.
inline StCutInstance stcut_instance(const WeightedDigraph& d, const std::string& s,
                                    const std::string& t,
                                    std::int64_t terminal_cost = 1) {
  arc_indices(d);
  std::set<std::string> used(d.vertices.begin(), d.vertices.end());
  if (s == t || !used.count(s) || !used.count(t))
    throw Error(ErrorCode::BadTerminals,
                "terminals '" + s + "' and '" + t + "' must be distinct vertices");
  const std::int64_t a = static_cast<std::int64_t>(d.arcs.size());
  InstanceData data;
  data.vertices = d.vertices;
  const std::string s2 = detail::fresh_name(used, s + "'");
  const std::string t2 = detail::fresh_name(used, t + "'");
  data.vertices.push_back(s2);
  data.vertices.push_back(t2);
  data.family = {{"M", {Rational(1), Rational(0), Rational(1), Rational(1)}},
                 {"S", {Rational(a), Rational(0), Rational(0), Rational(0)}},
                 {"T", {Rational(0), Rational(0), Rational(0), Rational(a)}}};
  for (const WeightedArc& arc : d.arcs)
    data.arcs.push_back({arc.tail, arc.head, Rational(1), "M"});
  data.arcs.push_back({s2, s, Rational(terminal_cost), "S"});
  data.arcs.push_back({t, t2, Rational(terminal_cost), "T"});
  return {Instance(data), a};
}

struct StCutResult {
  std::int64_t cut_size = 0;
  /// Sides of the digraph's own vertices; s in X1 and t in X2.
  Partition partition;
};

/// Minimum number of arcs from the X1 side of s to the X2 side of t.
/// Arc weights are ignored.
inline StCutResult min_st_cut_via_mwdp(const WeightedDigraph& d, const std::string& s,
                                       const std::string& t) {
  const std::size_t n = d.vertices.size();
  for (std::int64_t terminal_cost : {1, 2}) {
    StCutInstance built = stcut_instance(d, s, t, terminal_cost);
    const Instance& inst = built.instance;
    const Solution sol = solve_mincut(inst);
    const std::size_t si = inst.index_of(s), ti = inst.index_of(t);
    if (built.arcs == 0) {
      Partition p(n);
      p.set(ti, Side::X2);
      return {0, std::move(p)};
    }
    if (sol.partition.side(si) != Side::X1 || sol.partition.side(ti) != Side::X2)
      continue;  // equal-weight labelling that separates nothing; force harder
    const Rational cut =
        Rational((1 + 2 * terminal_cost) * built.arcs) - sol.weight;
    const auto size = cut.as_int64();
    if (!size) throw Error(ErrorCode::Internal, "fractional cut size " + cut.str());
    std::vector<Side> sides(sol.partition.sides().begin(),
                            sol.partition.sides().begin() + static_cast<std::ptrdiff_t>(n));
    return {*size, Partition(std::move(sides))};
  }
  throw Error(ErrorCode::Internal, "terminals were not separated");
}

// ---- maximum weighted directed cut -------------------------------------

/// M = [[0,1],[0,0]]: only arcs from X1 to X2 score.
inline Instance dicut_instance(const WeightedDigraph& d) {
  return detail::weighted_instance(d, {Rational(0), Rational(1), Rational(0), Rational(0)});
}

struct DicutResult {
  Rational value;
  Partition partition;
};

inline DicutResult max_weighted_dicut(const WeightedDigraph& d,
                                      const BruteForceOptions& opts = {}) {
  Solution s = brute_force(dicut_instance(d), opts);
  return {s.weight, std::move(s.partition)};
}

}  // namespace mwdp
