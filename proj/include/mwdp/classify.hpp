#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwdp/error.hpp"
#include "mwdp/matrix.hpp"

namespace mwdp {

enum class Case { PolyA, PolyB, PolyC, Hard };

inline const char* to_string(Case c) {
  switch (c) {
    case Case::PolyA: return "poly_a";
    case Case::PolyB: return "poly_b";
    case Case::PolyC: return "poly_c";
    case Case::Hard: return "hard";
  }
  return "hard";
}

struct MatrixProperties {
  bool a = false;
  bool b = false;
  bool c = false;
  friend bool operator==(const MatrixProperties&,
                         const MatrixProperties&) = default;
};

inline MatrixProperties properties_of(const Matrix2x2& m) {
  return {m.property_a(), m.property_b(), m.property_c()};
}

/// Outcome of the tractability dichotomy for a matrix family.
struct Verdict {
  Case kase = Case::Hard;
  /// Declaration order is kept.
  std::vector<std::pair<std::string, MatrixProperties>> per_matrix;

  /// First matrices (in declaration order) violating (a), (b), (c); only set
  /// for Hard.
  struct Witnesses {
    std::string violates_a;
    std::string violates_b;
    std::string violates_c;
  };
  std::optional<Witnesses> witnesses;
};

/// Decides which tractable branch applies, preferring PolyB, then PolyC, then
/// PolyA when several hold.
inline Verdict classify(
    const std::vector<std::pair<std::string, Matrix2x2>>& family) {
  if (family.empty())
    throw Error(ErrorCode::EmptyFamily, "matrix family is empty");

  Verdict v;
  bool all_a = true, all_b = true, all_c = true;
  std::optional<std::string> not_a, not_b, not_c;
  for (const auto& [id, m] : family) {
    MatrixProperties p = properties_of(m);
    v.per_matrix.emplace_back(id, p);
    if (!p.a) {
      all_a = false;
      if (!not_a) not_a = id;
    }
    if (!p.b) {
      all_b = false;
      if (!not_b) not_b = id;
    }
    if (!p.c) {
      all_c = false;
      if (!not_c) not_c = id;
    }
  }

  if (all_b)
    v.kase = Case::PolyB;
  else if (all_c)
    v.kase = Case::PolyC;
  else if (all_a)
    v.kase = Case::PolyA;
  else {
    v.kase = Case::Hard;
    v.witnesses = Verdict::Witnesses{*not_a, *not_b, *not_c};
  }
  return v;
}

}  // namespace mwdp
