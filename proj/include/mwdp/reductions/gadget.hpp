#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mwdp/error.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/rational.hpp"

namespace mwdp {

/// Per-case contributions and constants of an emitted reduction instance.
/// For hypergraph reductions s[k] is the contribution of an edge with k
/// vertices in X1; for MaxCut reductions s = {s_A, s_B, s_C, s_D}.
struct GadgetReport {
  std::array<Rational, 4> s;
  Rational epsilon_or_theta;
  Rational K{1};
  Rational base_weight;
};

namespace detail {

/// InstanceData under construction that remembers which arcs belong to
/// forcing gadgets.
struct GadgetBuilder {
  InstanceData data;
  std::vector<bool> in_gadget;

  void arc(const std::string& tail, const std::string& head, Rational cost,
           const std::string& matrix, bool gadget) {
    data.arcs.push_back({tail, head, std::move(cost), matrix});
    in_gadget.push_back(gadget);
  }

  const Matrix2x2& matrix(const std::string& id) const {
    for (const auto& [name, m] : data.family)
      if (name == id) return m;
    throw Error(ErrorCode::Internal, "unknown gadget matrix " + id);
  }

  /// Largest possible swing of all non-gadget arcs.
  Rational free_range() const {
    Rational w;
    for (std::size_t i = 0; i < data.arcs.size(); ++i) {
      if (in_gadget[i]) continue;
      const Matrix2x2& m = matrix(data.arcs[i].matrix);
      w += data.arcs[i].cost * (m.max_entry() - m.min_entry());
    }
    return w;
  }

  void scale_gadgets(const Rational& k) {
    for (std::size_t i = 0; i < data.arcs.size(); ++i)
      if (in_gadget[i]) data.arcs[i].cost *= k;
  }
};

struct GadgetAnalysis {
  Rational best;
  Rational gap;  // best minus the best partition that breaks the forcing
  std::vector<Side> best_sides;
};

/// Enumerates every partition of a small gadget and checks that all optima
/// put `x1_side` in X1 and `x2_side` in X2. Internal vertices may vary.
inline GadgetAnalysis analyze_gadget(const Instance& gadget,
                                     const std::vector<std::string>& x1_side,
                                     const std::vector<std::string>& x2_side) {
  const std::size_t n = gadget.num_vertices();
  if (n == 0 || n > 16) throw Error(ErrorCode::Internal, "bad gadget size");
  std::vector<std::size_t> must_x1, must_x2;
  for (const auto& id : x1_side) must_x1.push_back(gadget.index_of(id));
  for (const auto& id : x2_side) must_x2.push_back(gadget.index_of(id));

  GadgetAnalysis out;
  bool have_best = false, have_violator = false;
  Rational violator;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const Partition p = Partition::from_x2_bits(n, bits);
    const Rational w = partition_weight(gadget, p);
    bool forced = true;
    for (std::size_t v : must_x1) forced = forced && p.side(v) == Side::X1;
    for (std::size_t v : must_x2) forced = forced && p.side(v) == Side::X2;
    if (!forced) {
      if (!have_violator || w > violator) violator = w;
      have_violator = true;
    } else if (!have_best || w > out.best) {
      out.best = w;
      out.best_sides = p.sides();
      have_best = true;
    }
  }
  if (!have_best || !have_violator || !(violator < out.best))
    throw Error(ErrorCode::Internal, "gadget does not force its terminals");
  out.gap = out.best - violator;
  return out;
}

}  // namespace detail

}  // namespace mwdp
