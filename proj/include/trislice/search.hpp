#pragma once

#include <cstdint>
#include <optional>

#include "trislice/family.hpp"
#include "trislice/profile.hpp"

namespace trislice {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_time_seconds;
  int parallel_width = 1;  // worker count; 1 gives a deterministic witness
};

struct SearchOptions {
  // Stop once the incumbent reaches the tightest proven bound for the
  // profile; no larger family can exist unless a theorem is wrong.
  bool use_bound_cutoff = true;
  // Restrict the first member to one canonical representative per size
  // (ground-set relabeling symmetry). Changes the witness, not the maximum.
  bool canonical_first = false;
  // Optional starting incumbent; must itself satisfy the profile's
  // constraints among its members.
  std::optional<SetFamily> seed;
};

struct SearchOutcome {
  int max_size = 0;
  SetFamily witness;        // certified family unless infeasible
  bool exhausted = false;   // true means max_size is the true maximum
  bool infeasible = false;  // no family reaches the profile arity k
  bool bound_capped = false;  // search ended because the incumbent met a proven bound
  std::uint64_t nodes_visited = 0;
  double elapsed_seconds = 0.0;

  SearchOutcome() : witness(1) {}
};

// Incremental membership test: true iff family + candidate still satisfies
// every constraint involving the candidate. A candidate already present is a
// duplication error.
bool extend_check(const SetFamily& family, const Subset& candidate,
                  const IntersectionProfile& profile);

// Exhaustive depth-first maximization of family size under the profile.
// Members are added in increasing lex position, so each family is visited
// once; pruning uses the candidate suffix count and the proven bounds.
// With workers == 1 the witness is the lex-least maximum family.
SearchOutcome max_family(int n, const IntersectionProfile& profile,
                         const SearchBudget& budget = {}, const SearchOptions& options = {});

// True iff the outcome's witness verifies and matches max_size; vacuously
// true for infeasible outcomes.
bool certify(const SearchOutcome& outcome, const IntersectionProfile& profile);

// Largest ground size max_family accepts; beyond this the candidate
// enumeration (2^n subsets) stops being a desk-scale computation.
inline constexpr int kMaxSearchGround = 24;

}  // namespace trislice
