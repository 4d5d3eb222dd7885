#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mwdp/graphs.hpp"

namespace mwdp {

/// Lines of the Fano plane on points 0..6. The first line is the one removed
/// during surgery.
inline constexpr std::array<std::array<int, 3>, 7> kFanoLines{{
    {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};

/// Rewrites h into a linear 3-uniform hypergraph with the same
/// 2-colorability. Each step takes the first overlapping pair of edges,
/// deletes their smallest shared vertex x1, adds a Fano plane minus one line
/// {f1,f2,f3}, and reconnects the edges through x1 to f1, f2 (the overlapping
/// pair) and round-robin from f3 (the rest).
inline Hypergraph3 make_linear(const Hypergraph3& input) {
  edge_indices(input);
  Hypergraph3 h = input;
  std::set<std::string> used(h.vertices.begin(), h.vertices.end());

  for (std::size_t round = 0;; ++round) {
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) pos[h.vertices[i]] = i;

    std::size_t ey = 0, ez = 0;
    std::string x1;
    bool found = false;
    for (std::size_t i = 0; i < h.edges.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < h.edges.size() && !found; ++j) {
        std::vector<std::string> shared;
        for (const auto& a : h.edges[i])
          for (const auto& b : h.edges[j])
            if (a == b) shared.push_back(a);
        if (shared.size() < 2) continue;
        x1 = shared[0];
        for (const auto& s : shared)
          if (pos[s] < pos[x1]) x1 = s;
        ey = i;
        ez = j;
        found = true;
      }
    }
    if (!found) return h;

    std::array<std::string, 7> f;
    for (std::size_t k = 0; k < 7; ++k)
      f[k] = detail::fresh_name(
          used, "fano" + std::to_string(round) + "_" + std::to_string(k));

    h.vertices.erase(h.vertices.begin() + static_cast<std::ptrdiff_t>(pos[x1]));
    h.vertices.insert(h.vertices.end(), f.begin(), f.end());

    std::size_t next = 2;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      for (auto& v : h.edges[i]) {
        if (v != x1) continue;
        if (i == ey) {
          v = f[0];
        } else if (i == ez) {
          v = f[1];
        } else {
          v = f[next];
          next = (next + 1) % 3;
        }
      }
    }
    for (std::size_t l = 1; l < kFanoLines.size(); ++l)
      h.edges.push_back({f[kFanoLines[l][0]], f[kFanoLines[l][1]], f[kFanoLines[l][2]]});
  }
}

}  // namespace mwdp
