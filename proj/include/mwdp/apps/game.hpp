#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mwdp/classify.hpp"
#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/solve.hpp"

namespace mwdp {

/// Two-action polymatrix game on an undirected graph. payoffs[{i,j}] is the
/// matrix of payoffs player i receives from its game with j, indexed by
/// (action of i, action of j). importance is keyed by the edge as listed.
struct PolymatrixGame {
  std::vector<std::string> players;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::pair<std::string, std::string>, Matrix2x2> payoffs;
  std::map<std::pair<std::string, std::string>, Rational> importance;
};

namespace detail {

inline Rational edge_importance(const PolymatrixGame& g, const std::string& i,
                                const std::string& j) {
  if (auto it = g.importance.find({i, j}); it != g.importance.end()) return it->second;
  if (auto it = g.importance.find({j, i}); it != g.importance.end()) return it->second;
  return Rational(1);
}

inline void validate_game(const PolymatrixGame& g) {
  edge_indices(Graph{g.players, g.edges});
  std::set<std::pair<std::string, std::string>> ordered;
  for (const auto& [i, j] : g.edges) {
    ordered.insert({i, j});
    ordered.insert({j, i});
  }
  for (const auto& pair : ordered)
    if (!g.payoffs.count(pair))
      throw Error(ErrorCode::UnknownMatrix,
                  "missing payoff matrix for " + pair.first + "->" + pair.second);
  for (const auto& [pair, m] : g.payoffs)
    if (!ordered.count(pair))
      throw Error(ErrorCode::UnknownMatrix, "payoff " + pair.first + "->" +
                                                pair.second + " is not on an edge");
  for (const auto& [pair, c] : g.importance) {
    if (!ordered.count(pair))
      throw Error(ErrorCode::UnknownVertex, "importance " + pair.first + "-" +
                                                pair.second + " is not an edge");
    if (c.sign() < 0)
      throw Error(ErrorCode::NegativeCost,
                  "importance " + pair.first + "-" + pair.second + " is negative");
  }
}

}  // namespace detail

/// Symmetric instance whose partition weights are the social welfare of the
/// corresponding profiles (action One is X1).
inline Instance game_to_mwsdp(const PolymatrixGame& g) {
  detail::validate_game(g);
  InstanceData d;
  d.kind = Kind::Symmetric;
  d.vertices = g.players;
  for (const auto& [i, j] : g.edges) {
    const Rational c = detail::edge_importance(g, i, j);
    const std::string ij = i + "->" + j, ji = j + "->" + i;
    d.family.emplace_back(ij, g.payoffs.at({i, j}));
    d.family.emplace_back(ji, g.payoffs.at({j, i}));
    d.arcs.push_back({i, j, c, ij});
    d.arcs.push_back({j, i, c, ji});
  }
  // a game without edges still needs a family to classify
  if (d.family.empty()) d.family.emplace_back("zero", Matrix2x2{});
  return Instance(d);
}

struct WelfareResult {
  Partition profile;  // X1 = action One
  Rational welfare;
  Verdict verdict;
  Method method = Method::BruteForce;
};

inline WelfareResult max_welfare(const PolymatrixGame& g, const SolveOptions& opts = {}) {
  const Instance inst = game_to_mwsdp(g);
  Verdict verdict = classify(inst.family());
  Solution s = solve(inst, opts);
  return WelfareResult{std::move(s.partition), s.weight, std::move(verdict), s.method};
}

}  // namespace mwdp
