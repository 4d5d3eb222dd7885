#pragma once

// Test-only fixtures, random generators and independent oracles. Nothing in
// here calls the solver code paths it is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mwdp/graphs.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/matrix.hpp"
#include "mwdp/rational.hpp"

namespace mwdp::testing {

inline Rational R(std::int64_t n, std::int64_t d = 1) {
  return Rational(Integer(n), Integer(d));
}

inline Matrix2x2 M(std::int64_t a, std::int64_t b, std::int64_t c,
                   std::int64_t d) {
  return Matrix2x2{R(a), R(b), R(c), R(d)};
}

/// x->y (c=1, M1), y->z (c=2, M2); oriented.
inline Instance sample_oriented() {
  InstanceData d;
  d.kind = Kind::Oriented;
  d.vertices = {"x", "y", "z"};
  d.family = {{"M1", M(4, 2, 2, 6)}, {"M2", M(7, 5, 6, 2)}};
  d.arcs = {{"x", "y", R(1), "M1"}, {"y", "z", R(2), "M2"}};
  return Instance(d);
}

/// Symmetric instance over R1, R2, R3.
inline Instance sample_symmetric() {
  InstanceData d;
  d.kind = Kind::Symmetric;
  d.vertices = {"x", "y", "z"};
  d.family = {{"R1", M(2, 0, 2, 3)}, {"R2", M(3, 4, 1, 3)}, {"R3", M(4, 2, 5, 5)}};
  d.arcs = {{"x", "y", R(2), "R1"},
            {"y", "x", R(0), "R1"},
            {"y", "z", R(1), "R2"},
            {"z", "y", R(3), "R3"}};
  return Instance(d);
}

/// Direct per-case table lookup, summed from the last arc to the first.
inline Rational oracle_weight(const Instance& inst,
                              const std::vector<Side>& sides) {
  Rational total;
  const auto& arcs = inst.arcs();
  for (std::size_t k = arcs.size(); k-- > 0;) {
    const Arc& a = arcs[k];
    const Matrix2x2& m = inst.family()[a.matrix].second;
    const bool u1 = sides[a.tail] == Side::X1;
    const bool v1 = sides[a.head] == Side::X1;
    Rational entry;
    if (u1 && v1)
      entry = m.m11;
    else if (!u1 && !v1)
      entry = m.m22;
    else if (u1)
      entry = m.m12;
    else
      entry = m.m21;
    total += entry * a.cost;
  }
  return total;
}

inline std::vector<Side> sides_from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<Side> s(n, Side::X1);
  for (std::size_t i = 0; i < n; ++i)
    if ((bits >> i) & 1U) s[i] = Side::X2;
  return s;
}

/// Maximum over all 2^n partitions by plain enumeration.
inline Rational oracle_optimum(const Instance& inst) {
  const std::size_t n = inst.num_vertices();
  Rational best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Rational w = oracle_weight(inst, sides_from_bits(n, bits));
    if (bits == 0 || w > best) best = w;
  }
  return best;
}

/// Largest number of edges crossing any bipartition, by enumeration.
inline std::int64_t exhaustive_maxcut(const Graph& g) {
  const std::size_t n = g.vertices.size();
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[g.vertices[i]] = i;
  std::int64_t best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::int64_t cut = 0;
    for (const auto& [a, b] : g.edges)
      cut += ((bits >> at[a]) & 1U) != ((bits >> at[b]) & 1U);
    best = std::max(best, cut);
  }
  return best;
}

/// Every labelled simple graph on vertices "0".."n-1".
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g;
    for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U)
        g.edges.emplace_back(std::to_string(pairs[k].first),
                             std::to_string(pairs[k].second));
    out.push_back(std::move(g));
  }
  return out;
}

/// Backtracking search for a coloring with no monochromatic edge.
inline bool two_colorable(const Hypergraph3& h) {
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) at[h.vertices[i]] = i;
  std::vector<std::array<std::size_t, 3>> edges;
  for (const auto& e : h.edges) edges.push_back({at[e[0]], at[e[1]], at[e[2]]});
  std::vector<int> color(h.vertices.size(), -1);
  auto ok = [&] {
    for (const auto& e : edges) {
      const int a = color[e[0]], b = color[e[1]], c = color[e[2]];
      if (a >= 0 && a == b && b == c) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t v) -> bool {
    if (v == color.size()) return true;
    for (int c : {0, 1}) {
      color[v] = c;
      if (ok() && self(self, v + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  return search(search, 0);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Rational in [lo, hi] with denominator in {1, 2, 3, 4, 6}.
  Rational rational(std::int64_t lo, std::int64_t hi) {
    static const std::int64_t dens[] = {1, 2, 3, 4, 6};
    std::int64_t d = dens[uniform(0, 4)];
    return R(uniform(lo * d, hi * d), d);
  }

  Matrix2x2 any_matrix() {
    return {rational(-5, 5), rational(-5, 5), rational(-5, 5), rational(-5, 5)};
  }

  Matrix2x2 matrix_a() {
    for (;;) {
      Matrix2x2 m = any_matrix();
      if (m.property_a()) return m;
      // lift the diagonal just enough, keeping entries in [-5, 5]
      Rational deficit = m.m12 + m.m21 - m.m11 - m.m22;
      if (m.m22 + deficit <= R(5)) {
        m.m22 += deficit;
        return m;
      }
    }
  }

  Matrix2x2 matrix_b() {
    Matrix2x2 m = any_matrix();
    m.m11 = m.max_entry();
    if (coin()) m.m11 += rational(0, 2);
    return m;
  }

  Matrix2x2 matrix_c() { return matrix_b().side_swapped(); }

  /// Random instance on n vertices; each ordered pair becomes an arc with
  /// probability p, respecting `kind`.
  template <typename MatrixFn>
  Instance instance(std::size_t n, Kind kind, std::size_t family_size,
                    MatrixFn&& make_matrix, double p = 0.4) {
    InstanceData d;
    d.kind = kind;
    for (std::size_t i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < family_size; ++i)
      d.family.emplace_back("F" + std::to_string(i), make_matrix());
    auto pick = [&] { return d.family[uniform(0, family_size - 1)].first; };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!coin(p)) continue;
        const std::string& a = d.vertices[i];
        const std::string& b = d.vertices[j];
        switch (kind) {
          case Kind::Oriented:
            if (coin())
              d.arcs.push_back({a, b, rational(0, 5), pick()});
            else
              d.arcs.push_back({b, a, rational(0, 5), pick()});
            break;
          case Kind::Symmetric:
            d.arcs.push_back({a, b, rational(0, 5), pick()});
            d.arcs.push_back({b, a, rational(0, 5), pick()});
            break;
          case Kind::General: {
            int mode = static_cast<int>(uniform(0, 2));
            if (mode != 1) d.arcs.push_back({a, b, rational(0, 5), pick()});
            if (mode != 0) d.arcs.push_back({b, a, rational(0, 5), pick()});
            break;
          }
        }
      }
    }
    return Instance(d);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// The seven lines of the Fano plane on p0..p6.
inline Hypergraph3 fano() {
  Hypergraph3 h;
  for (int i = 0; i < 7; ++i) h.vertices.push_back("p" + std::to_string(i));
  static const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                  {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  for (const auto& l : lines)
    h.edges.push_back({h.vertices[l[0]], h.vertices[l[1]], h.vertices[l[2]]});
  return h;
}

inline Hypergraph3 random_hypergraph(Gen& gen, std::size_t n, std::size_t m,
                                     bool linear) {
  Hypergraph3 h;
  for (std::size_t i = 0; i < n; ++i) h.vertices.push_back("h" + std::to_string(i));
  std::set<std::array<std::size_t, 3>> seen;
  for (int attempt = 0; attempt < 200 && h.edges.size() < m; ++attempt) {
    std::array<std::size_t, 3> t{};
    for (auto& x : t) x = static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(n) - 1));
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || seen.count(t)) continue;
    if (linear) {
      bool overlaps = false;
      for (const auto& s : seen) {
        int shared = 0;
        for (auto a : s)
          for (auto b : t) shared += a == b;
        overlaps = overlaps || shared >= 2;
      }
      if (overlaps) continue;
    }
    seen.insert(t);
    h.edges.push_back({h.vertices[t[0]], h.vertices[t[1]], h.vertices[t[2]]});
  }
  return h;
}

}  // namespace mwdp::testing
