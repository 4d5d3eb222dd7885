#pragma once

#include "mwdp/instance.hpp"

namespace mwdp {

/// Adds the opposite of every arc with cost 0 and the same matrix, so every
/// partition keeps its weight.
inline Instance mwop_to_mwsdp(const Instance& inst) {
  if (inst.kind() != Kind::Oriented)
    throw Error(ErrorCode::KindViolation, "symmetrize expects an oriented instance");
  InstanceData d = inst.data();
  d.kind = Kind::Symmetric;
  for (const ArcSpec& a : inst.data().arcs)
    d.arcs.push_back({a.head, a.tail, Rational(0), a.matrix});
  return Instance(d);
}

}  // namespace mwdp
