#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mwdp/error.hpp"
#include "mwdp/matrix.hpp"
#include "mwdp/rational.hpp"

namespace mwdp {

enum class Kind { General, Oriented, Symmetric };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::General: return "general";
    case Kind::Oriented: return "oriented";
    case Kind::Symmetric: return "symmetric";
  }
  return "general";
}

/// An arc as written in an input file: endpoints and matrix by id.
struct ArcSpec {
  std::string tail;
  std::string head;
  Rational cost;
  std::string matrix;
};

/// Unvalidated instance description. Vertex and matrix order is the
/// declaration order and drives every deterministic tie-break.
struct InstanceData {
  Kind kind = Kind::General;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, Matrix2x2>> family;
  std::vector<ArcSpec> arcs;
};

/// A validated arc, endpoints and matrix resolved to indices.
struct Arc {
  std::size_t tail;
  std::size_t head;
  Rational cost;
  std::size_t matrix;
};

namespace detail {

inline std::string describe(const ArcSpec& a) {
  return "arc " + a.tail + "->" + a.head;
}

}  // namespace detail

/// Checks every structural invariant and throws Error naming the first
/// offending element.
inline void validate(const InstanceData& data) {
  std::unordered_map<std::string, std::size_t> vertex_index;
  for (std::size_t i = 0; i < data.vertices.size(); ++i) {
    if (!vertex_index.emplace(data.vertices[i], i).second)
      throw Error(ErrorCode::DuplicateVertex,
                  "duplicate vertex '" + data.vertices[i] + "'");
  }
  std::set<std::string> matrix_ids;
  for (const auto& [id, m] : data.family) {
    if (!matrix_ids.insert(id).second)
      throw Error(ErrorCode::UnknownMatrix, "duplicate matrix id '" + id + "'");
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const ArcSpec& a : data.arcs) {
    auto t = vertex_index.find(a.tail);
    if (t == vertex_index.end())
      throw Error(ErrorCode::UnknownVertex,
                  detail::describe(a) + ": unknown vertex '" + a.tail + "'");
    auto h = vertex_index.find(a.head);
    if (h == vertex_index.end())
      throw Error(ErrorCode::UnknownVertex,
                  detail::describe(a) + ": unknown vertex '" + a.head + "'");
    if (t->second == h->second)
      throw Error(ErrorCode::SelfLoop, detail::describe(a) + " is a self-loop");
    if (a.cost.sign() < 0)
      throw Error(ErrorCode::NegativeCost,
                  detail::describe(a) + " has negative cost " + a.cost.str());
    if (!matrix_ids.count(a.matrix))
      throw Error(ErrorCode::UnknownMatrix, detail::describe(a) +
                                                " refers to unknown matrix '" +
                                                a.matrix + "'");
    if (!seen.emplace(t->second, h->second).second)
      throw Error(ErrorCode::DuplicateArc,
                  detail::describe(a) + " appears more than once");
  }

  if (data.kind == Kind::Oriented) {
    for (const ArcSpec& a : data.arcs) {
      if (seen.count({vertex_index[a.head], vertex_index[a.tail]}))
        throw Error(ErrorCode::KindViolation,
                    detail::describe(a) +
                        " has its opposite arc in an oriented instance");
    }
  } else if (data.kind == Kind::Symmetric) {
    for (const ArcSpec& a : data.arcs) {
      if (!seen.count({vertex_index[a.head], vertex_index[a.tail]}))
        throw Error(ErrorCode::KindViolation,
                    detail::describe(a) +
                        " lacks its opposite arc in a symmetric instance");
    }
  }
}

/// A validated MWDP instance. Immutable after construction.
class Instance {
 public:
  explicit Instance(InstanceData data) : data_(std::move(data)) {
    validate(data_);
    for (std::size_t i = 0; i < data_.vertices.size(); ++i)
      vertex_index_.emplace(data_.vertices[i], i);
    std::unordered_map<std::string, std::size_t> matrix_index;
    for (std::size_t i = 0; i < data_.family.size(); ++i)
      matrix_index.emplace(data_.family[i].first, i);
    incident_.resize(data_.vertices.size());
    arcs_.reserve(data_.arcs.size());
    for (const ArcSpec& a : data_.arcs) {
      std::size_t id = arcs_.size();
      arcs_.push_back(Arc{vertex_index_.at(a.tail), vertex_index_.at(a.head),
                          a.cost, matrix_index.at(a.matrix)});
      incident_[arcs_.back().tail].push_back(id);
      incident_[arcs_.back().head].push_back(id);
    }
  }

  Kind kind() const { return data_.kind; }
  std::size_t num_vertices() const { return data_.vertices.size(); }
  const std::vector<std::string>& vertices() const { return data_.vertices; }
  const std::string& vertex(std::size_t i) const { return data_.vertices[i]; }
  std::size_t index_of(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
      throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
    return it->second;
  }
  bool has_vertex(const std::string& id) const {
    return vertex_index_.count(id) != 0;
  }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<std::pair<std::string, Matrix2x2>>& family() const {
    return data_.family;
  }
  const Matrix2x2& matrix_of(const Arc& a) const {
    return data_.family[a.matrix].second;
  }
  /// Arc indices incident to vertex v (as tail or head).
  const std::vector<std::size_t>& incident(std::size_t v) const {
    return incident_[v];
  }
  bool is_isolated(std::size_t v) const { return incident_[v].empty(); }

  const InstanceData& data() const { return data_; }

 private:
  InstanceData data_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Bipartition (X1, X2) of an instance's vertices, stored per vertex in
/// declaration order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::size_t n, Side fill = Side::X1) : sides_(n, fill) {}
  explicit Partition(std::vector<Side> sides) : sides_(std::move(sides)) {}

  /// Bit i of `x2_bits` puts vertex i into X2.
  static Partition from_x2_bits(std::size_t n, std::uint64_t x2_bits) {
    Partition p(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((x2_bits >> i) & 1U) p.sides_[i] = Side::X2;
    return p;
  }

  std::size_t size() const { return sides_.size(); }
  Side side(std::size_t v) const { return sides_[v]; }
  void set(std::size_t v, Side s) { sides_[v] = s; }
  void flip(std::size_t v) { sides_[v] = opposite(sides_[v]); }
  const std::vector<Side>& sides() const { return sides_; }

  /// Same partition with X1 and X2 exchanged.
  Partition swapped() const {
    Partition p(*this);
    for (auto& s : p.sides_) s = opposite(s);
    return p;
  }

  std::vector<std::size_t> members(Side s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sides_.size(); ++i)
      if (sides_[i] == s) out.push_back(i);
    return out;
  }

  /// Tie-break order used by every solver: compare vertex by vertex in
  /// declaration order, the partition with the vertex in X1 at the first
  /// difference is preferred.
  friend bool preferred(const Partition& a, const Partition& b) {
    return a.sides_ < b.sides_;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Side> sides_;
};

inline std::vector<std::string> member_ids(const Instance& inst,
                                           const Partition& p, Side s) {
  std::vector<std::string> out;
  for (std::size_t v : p.members(s)) out.push_back(inst.vertex(v));
  return out;
}

inline Rational arc_weight(const Arc& arc, const Matrix2x2& m,
                           const Partition& p) {
  if (arc.cost.sign() == 0) return Rational(0);
  return arc.cost * m.at(p.side(arc.tail), p.side(arc.head));
}

/// w^P(D): sum of arc weights under partition p.
inline Rational partition_weight(const Instance& inst, const Partition& p) {
  if (p.size() != inst.num_vertices())
    throw Error(ErrorCode::Internal, "partition does not cover the instance");
  Rational total;
  for (const Arc& a : inst.arcs()) total += arc_weight(a, inst.matrix_of(a), p);
  return total;
}

}  // namespace mwdp
