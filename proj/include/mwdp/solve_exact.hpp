#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mwdp/error.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/solution.hpp"

namespace mwdp {

/// Per-arc weights c*m_rc for the four endpoint placements, all multiplied by
/// one common positive integer so that enumeration runs on integers.
template <typename T>
struct ScaledWeights {
  std::vector<std::array<T, 4>> values;
  Integer scale{1};

  const T& at(std::size_t arc, Side tail, Side head) const {
    return values[arc][static_cast<std::size_t>(tail) * 2 +
                       static_cast<std::size_t>(head)];
  }
  Rational to_rational(const T& v) const { return Rational(Integer(v), scale); }
};

/// Calls f with ScaledWeights<int64_t> when every partition weight fits
/// comfortably in 64 bits, otherwise with ScaledWeights<Integer>.
template <typename F>
decltype(auto) with_scaled_weights(const Instance& inst, F&& f) {
  Integer scale(1);
  for (const Arc& a : inst.arcs()) {
    const Matrix2x2& m = inst.matrix_of(a);
    for (const Rational* e : {&m.m11, &m.m12, &m.m21, &m.m22})
      scale = lcm(scale, (a.cost * *e).denominator());
  }
  std::vector<std::array<Integer, 4>> big;
  big.reserve(inst.arcs().size());
  Integer bound(0);
  for (const Arc& a : inst.arcs()) {
    const Matrix2x2& m = inst.matrix_of(a);
    std::array<Integer, 4> row;
    const Rational* entries[4] = {&m.m11, &m.m12, &m.m21, &m.m22};
    Integer worst(0);
    for (std::size_t k = 0; k < 4; ++k) {
      Rational v = a.cost * *entries[k] * Rational(scale);
      row[k] = v.numerator();
      Integer mag = row[k] < 0 ? Integer(-row[k]) : row[k];
      if (mag > worst) worst = mag;
    }
    bound += worst;
    big.push_back(std::move(row));
  }

  if (bound < (Integer(1) << 62)) {
    ScaledWeights<std::int64_t> w;
    w.scale = scale;
    w.values.reserve(big.size());
    for (const auto& row : big)
      w.values.push_back({static_cast<std::int64_t>(row[0]),
                          static_cast<std::int64_t>(row[1]),
                          static_cast<std::int64_t>(row[2]),
                          static_cast<std::int64_t>(row[3])});
    return f(w);
  }
  ScaledWeights<Integer> w;
  w.scale = scale;
  w.values = std::move(big);
  return f(w);
}

enum class TieBreak {
  /// First differing vertex (declaration order) in X1 wins.
  PreferX1,
  /// Fewest X1 members, then PreferX1.
  FewestX1,
};

struct BruteForceOptions {
  std::size_t cap = default_cap();
  unsigned threads = 1;
  TieBreak tie_break = TieBreak::PreferX1;
};

namespace detail {

// Enumeration key: vertex i maps to bit (n-1-i), so PreferX1 is the
// numerically smallest key.
template <typename T>
struct Candidate {
  T weight{};
  std::uint64_t key = 0;
  bool valid = false;
};

template <typename T>
bool better(const T& w, std::uint64_t key, const Candidate<T>& best,
            TieBreak tb) {
  if (!best.valid || w > best.weight) return true;
  if (w < best.weight) return false;
  if (tb == TieBreak::FewestX1) {
    // fewer X1 members == more set bits
    int a = std::popcount(key), b = std::popcount(best.key);
    if (a != b) return a > b;
  }
  return key < best.key;
}

template <typename T>
T full_weight(const Instance& inst, const ScaledWeights<T>& w,
              const std::vector<Side>& sides) {
  T total{0};
  const auto& arcs = inst.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i)
    total += w.at(i, sides[arcs[i].tail], sides[arcs[i].head]);
  return total;
}

template <typename T>
T flip_gain(const Instance& inst, const ScaledWeights<T>& w,
            std::vector<Side>& sides, std::size_t v) {
  const auto& arcs = inst.arcs();
  T delta{0};
  for (std::size_t id : inst.incident(v))
    delta -= w.at(id, sides[arcs[id].tail], sides[arcs[id].head]);
  sides[v] = opposite(sides[v]);
  for (std::size_t id : inst.incident(v))
    delta += w.at(id, sides[arcs[id].tail], sides[arcs[id].head]);
  sides[v] = opposite(sides[v]);
  return delta;
}

// Vertices 0..k-1 are fixed by `prefix`; the rest run through a Gray code.
template <typename T>
Candidate<T> enumerate_chunk(const Instance& inst, const ScaledWeights<T>& w,
                             std::size_t k, std::uint64_t prefix, TieBreak tb) {
  const std::size_t n = inst.num_vertices();
  const std::size_t free_bits = n - k;
  std::uint64_t key = prefix << free_bits;
  std::vector<Side> sides(n, Side::X1);
  for (std::size_t i = 0; i < n; ++i)
    if ((key >> (n - 1 - i)) & 1U) sides[i] = Side::X2;

  T weight = full_weight(inst, w, sides);
  Candidate<T> best;
  best.weight = weight;
  best.key = key;
  best.valid = true;

  const auto& arcs = inst.arcs();
  const std::uint64_t steps = std::uint64_t{1} << free_bits;
  for (std::uint64_t j = 1; j < steps; ++j) {
    const int bit = std::countr_zero(j);
    const std::size_t v = n - 1 - static_cast<std::size_t>(bit);
    for (std::size_t id : inst.incident(v))
      weight -= w.at(id, sides[arcs[id].tail], sides[arcs[id].head]);
    sides[v] = opposite(sides[v]);
    for (std::size_t id : inst.incident(v))
      weight += w.at(id, sides[arcs[id].tail], sides[arcs[id].head]);
    key ^= std::uint64_t{1} << bit;
    if (better(weight, key, best, tb)) {
      best.weight = weight;
      best.key = key;
    }
  }
  return best;
}

inline Partition partition_from_key(std::size_t n, std::uint64_t key) {
  Partition p(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((key >> (n - 1 - i)) & 1U) p.set(i, Side::X2);
  return p;
}

inline unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace detail

/// Exhaustive optimum over all 2^n partitions. The result does not depend on
/// `threads`: chunks are merged with the same global tie-break.
inline Solution brute_force(const Instance& inst,
                            const BruteForceOptions& opts = {}) {
  const std::size_t n = inst.num_vertices();
  if (n > opts.cap || n > kMaxEnumerableVertices)
    throw Error(ErrorCode::TooLarge,
                "brute force on " + std::to_string(n) +
                    " vertices exceeds cap " + std::to_string(opts.cap));
  if (n == 0) return Solution{Partition(0), Rational(0), Method::BruteForce};

  return with_scaled_weights(inst, [&](const auto& w) {
    using T = std::decay_t<decltype(w.values[0][0])>;
    const unsigned threads = detail::resolve_threads(opts.threads);
    std::size_t k = 0;
    if (threads > 1)
      while (k < n && (std::size_t{1} << k) < 4 * std::size_t{threads}) ++k;
    const std::uint64_t chunks = std::uint64_t{1} << k;

    std::vector<detail::Candidate<T>> results(chunks);
    auto work = [&](unsigned tid) {
      for (std::uint64_t c = tid; c < chunks; c += threads)
        results[c] = detail::enumerate_chunk(inst, w, k, c, opts.tie_break);
    };
    if (threads == 1 || chunks == 1) {
      work(0);
      for (unsigned t = 1; t < threads; ++t) work(t);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }

    detail::Candidate<T> best;
    for (const auto& r : results)
      if (r.valid && detail::better(r.weight, r.key, best, opts.tie_break))
        best = r;
    return Solution{detail::partition_from_key(n, best.key),
                    w.to_rational(best.weight), Method::BruteForce};
  });
}

struct LocalSearchOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 16;
  unsigned threads = 1;
};

/// Best of `restarts` first-improvement single-flip ascents. Restart r starts
/// from partition key r when restarts >= 2^n (every start is covered),
/// otherwise from a random partition drawn from the stream (seed, r).
inline Solution local_search(const Instance& inst,
                             const LocalSearchOptions& opts = {}) {
  const std::size_t n = inst.num_vertices();
  const std::size_t restarts = std::max<std::size_t>(1, opts.restarts);
  const bool exhaustive_starts =
      n < 63 && restarts >= (std::size_t{1} << n);

  return with_scaled_weights(inst, [&](const auto& w) {
    using T = std::decay_t<decltype(w.values[0][0])>;
    struct Run {
      T weight{};
      std::vector<Side> sides;
    };
    std::vector<Run> runs(restarts);

    auto climb = [&](std::size_t r) {
      std::vector<Side> sides(n, Side::X1);
      if (exhaustive_starts && r < (std::size_t{1} << n)) {
        for (std::size_t i = 0; i < n; ++i)
          if ((r >> (n - 1 - i)) & 1U) sides[i] = Side::X2;
      } else {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed),
                          static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(r),
                          static_cast<std::uint32_t>(std::uint64_t{r} >> 32)};
        std::mt19937_64 rng(seq);
        for (std::size_t i = 0; i < n; ++i)
          sides[i] = (rng() >> 63) ? Side::X2 : Side::X1;
      }
      T weight = detail::full_weight(inst, w, sides);
      for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t v = 0; v < n; ++v) {
          T gain = detail::flip_gain(inst, w, sides, v);
          if (gain > 0) {
            sides[v] = opposite(sides[v]);
            weight += gain;
            improved = true;
          }
        }
      }
      runs[r] = Run{weight, std::move(sides)};
    };

    const unsigned threads = detail::resolve_threads(opts.threads);
    if (threads == 1 || restarts == 1) {
      for (std::size_t r = 0; r < restarts; ++r) climb(r);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t r = t; r < restarts; r += threads) climb(r);
        });
      for (auto& th : pool) th.join();
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r) {
      if (runs[r].weight > runs[best].weight ||
          (runs[r].weight == runs[best].weight &&
           runs[r].sides < runs[best].sides))
        best = r;
    }
    return Solution{Partition(runs[best].sides),
                    w.to_rational(runs[best].weight), Method::LocalSearch};
  });
}

/// Exact optimum for instances where removing `separator` leaves only small
/// components: enumerates the separator's assignments and, for each, solves
/// every component independently by enumeration. Ties prefer X1 on the
/// separator, then within each component.
inline Solution separator_exact(const Instance& inst,
                                const std::vector<std::size_t>& separator,
                                std::size_t component_cap = 24) {
  const std::size_t n = inst.num_vertices();
  std::vector<bool> in_sep(n, false);
  for (std::size_t v : separator) in_sep.at(v) = true;
  if (separator.size() > 30)
    throw Error(ErrorCode::TooLarge, "separator larger than 30 vertices");

  // Components of D - separator.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : inst.arcs())
    if (!in_sep[a.tail] && !in_sep[a.head])
      parent[find(a.tail)] = find(a.head);

  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> comp_of(n, SIZE_MAX);
  {
    std::vector<std::size_t> root_to_comp(n, SIZE_MAX);
    for (std::size_t v = 0; v < n; ++v) {
      if (in_sep[v]) continue;
      std::size_t r = find(v);
      if (root_to_comp[r] == SIZE_MAX) {
        root_to_comp[r] = comps.size();
        comps.emplace_back();
      }
      comp_of[v] = root_to_comp[r];
      comps[comp_of[v]].push_back(v);
    }
  }
  for (const auto& c : comps)
    if (c.size() > component_cap)
      throw Error(ErrorCode::TooLarge,
                  "component of " + std::to_string(c.size()) +
                      " vertices exceeds cap " + std::to_string(component_cap));

  std::vector<std::vector<std::size_t>> comp_arcs(comps.size());
  std::vector<std::size_t> sep_arcs;
  for (std::size_t id = 0; id < inst.arcs().size(); ++id) {
    const Arc& a = inst.arcs()[id];
    if (!in_sep[a.tail])
      comp_arcs[comp_of[a.tail]].push_back(id);
    else if (!in_sep[a.head])
      comp_arcs[comp_of[a.head]].push_back(id);
    else
      sep_arcs.push_back(id);
  }

  return with_scaled_weights(inst, [&](const auto& w) {
    using T = std::decay_t<decltype(w.values[0][0])>;
    const auto& arcs = inst.arcs();
    std::vector<Side> sides(n, Side::X1);
    std::vector<Side> best_sides;
    T best_weight{};
    bool have_best = false;

    const std::size_t s = separator.size();
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << s); ++key) {
      for (std::size_t i = 0; i < s; ++i)
        sides[separator[i]] = ((key >> (s - 1 - i)) & 1U) ? Side::X2 : Side::X1;
      T total{0};
      for (std::size_t id : sep_arcs)
        total += w.at(id, sides[arcs[id].tail], sides[arcs[id].head]);
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& verts = comps[c];
        const std::size_t m = verts.size();
        T local_best{};
        std::uint64_t local_key = 0;
        for (std::uint64_t ck = 0; ck < (std::uint64_t{1} << m); ++ck) {
          for (std::size_t i = 0; i < m; ++i)
            sides[verts[i]] = ((ck >> (m - 1 - i)) & 1U) ? Side::X2 : Side::X1;
          T local{0};
          for (std::size_t id : comp_arcs[c])
            local += w.at(id, sides[arcs[id].tail], sides[arcs[id].head]);
          if (ck == 0 || local > local_best) {
            local_best = local;
            local_key = ck;
          }
        }
        for (std::size_t i = 0; i < m; ++i)
          sides[verts[i]] =
              ((local_key >> (m - 1 - i)) & 1U) ? Side::X2 : Side::X1;
        total += local_best;
      }
      if (!have_best || total > best_weight) {
        best_weight = total;
        best_sides = sides;
        have_best = true;
      }
    }
    return Solution{Partition(best_sides), w.to_rational(best_weight),
                    Method::BruteForce};
  });
}

}  // namespace mwdp
