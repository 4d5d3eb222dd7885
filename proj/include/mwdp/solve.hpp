#pragma once

#include <string>

#include "mwdp/classify.hpp"
#include "mwdp/instance.hpp"
#include "mwdp/solution.hpp"
#include "mwdp/solve_exact.hpp"
#include "mwdp/solve_poly.hpp"

namespace mwdp {

/// Picks the solver from the family's classification. Hard instances above
/// the cap raise HardInstanceTooLarge.
inline Solution solve(const Instance& inst, const SolveOptions& opts = {}) {
  const Verdict v = classify(inst.family());
  switch (v.kase) {
    case Case::PolyB: return solve_trivial_b(inst);
    case Case::PolyC: return solve_trivial_c(inst);
    case Case::PolyA: return solve_mincut(inst);
    case Case::Hard: break;
  }
  if (inst.num_vertices() > opts.cap)
    throw Error(ErrorCode::HardInstanceTooLarge,
                "hard instance with " + std::to_string(inst.num_vertices()) +
                    " vertices exceeds brute-force cap " +
                    std::to_string(opts.cap));
  return brute_force(inst, BruteForceOptions{opts.cap, opts.threads});
}

}  // namespace mwdp
