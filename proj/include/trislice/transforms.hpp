#pragma once

#include <utility>
#include <vector>

#include "trislice/family.hpp"
#include "trislice/profile.hpp"

namespace trislice {

struct TransformOptions {
  // Re-verify outputs against the profile; lets the transforms surface a
  // broken invariant loudly. Can be switched off for throughput.
  bool reverify = true;
};

// Replaces member `index` with its complement in [n]. Requires a modular
// profile of shape (0, ..., 0, L) with p | n and L = -L; mirrors the fact
// that complementing one member preserves such a profile.
SetFamily complement_replace(const SetFamily& family, int index,
                             const IntersectionProfile& profile,
                             const TransformOptions& options = {});

struct TraceResult {
  SetFamily family;             // traces relabeled onto [|A_gamma|]
  IntersectionProfile profile;  // the shifted profile (L_2, ..., L_k)
  // Order-preserving bijection from elements of A_gamma to 1..|A_gamma|.
  std::vector<std::pair<int, int>> relabel;
  int t = 0;                    // the level pair (t, t+1) whose disjointness was used
};

// Intersects every other member with member `gamma` and relabels onto the
// elements of A_gamma. Requires some t > 1 with L_t and L_{t+1} disjoint
// (which guarantees the traces stay distinct), n > t, and a family that
// verifies under the profile.
TraceResult trace(const SetFamily& family, int gamma, const IntersectionProfile& profile,
                  const TransformOptions& options = {});

// Complements every member of size > n/2, in index order, so that all output
// members have size at most n/2. Same preconditions as complement_replace.
SetFamily shrink_small(const SetFamily& family, const IntersectionProfile& profile,
                       const TransformOptions& options = {});

}  // namespace trislice
