#pragma once

#include <array>
#include <ostream>

#include "mwdp/rational.hpp"

namespace mwdp {

/// Which side of the bipartition a vertex is on.
enum class Side : unsigned char { X1 = 0, X2 = 1 };

inline Side opposite(Side s) { return s == Side::X1 ? Side::X2 : Side::X1; }

/// 2x2 weight matrix. Entry (r, c) is the value of an arc whose tail lies in
/// X_r and whose head lies in X_c.
struct Matrix2x2 {
  Rational m11, m12, m21, m22;

  const Rational& at(Side tail, Side head) const {
    if (tail == Side::X1) return head == Side::X1 ? m11 : m12;
    return head == Side::X1 ? m21 : m22;
  }

  Rational max_entry() const { return max(max(m11, m12), max(m21, m22)); }
  Rational min_entry() const { return min(min(m11, m12), min(m21, m22)); }

  /// m11 + m22 >= m12 + m21
  bool property_a() const { return m11 + m22 >= m12 + m21; }
  /// m11 is a maximum entry
  bool property_b() const { return m11 == max_entry(); }
  /// m22 is a maximum entry
  bool property_c() const { return m22 == max_entry(); }

  /// Entry-wise transpose (m12 <-> m21).
  Matrix2x2 transposed() const { return {m11, m21, m12, m22}; }

  /// The matrix seen with X1 and X2 renamed: m11 <-> m22 and m12 <-> m21.
  /// Weights of (M, P) equal weights of (side_swapped(M), P with sides
  /// exchanged).
  Matrix2x2 side_swapped() const { return {m22, m21, m12, m11}; }

  friend bool operator==(const Matrix2x2&, const Matrix2x2&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix2x2& m) {
    return os << "[[" << m.m11 << "," << m.m12 << "],[" << m.m21 << ","
              << m.m22 << "]]";
  }
};

}  // namespace mwdp
