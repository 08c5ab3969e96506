#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trislice/numeric.hpp"
#include "trislice/profile.hpp"

namespace trislice {

// Exact binomial coefficient; C(a, i) = 0 for i > a >= 0. Negative a is a
// parameter error (the formulas below never define that regime).
BigInt binomial(std::int64_t a, std::int64_t i);
// Sum of C(a, i) for 0 <= i <= top.
BigInt binomial_sum(std::int64_t a, std::int64_t top);

// Pairwise modular intersections in a set L of s residues, sizes outside L:
// at most sum_{i<=s} C(n-1, i) members.
BigInt snevily_bound(int n, int s);
// Pairwise exact intersections in a set of s nonnegative integers:
// at most sum_{i<=s} C(n, i) members.
BigInt frankl_wilson_bound(int n, int s);
// Sharpening of the exact bound when L contains only positive integers.
BigInt fw_positive_L_bound(int n, int s);
// Conjectured strengthening C(n, s) of the modular pairwise bound.
BigInt snevily_conjecture_value(int n, int s);
// Pairwise bound for profiles (0, L) with L = -L: sum C(n-1, i) in general,
// improving to sum C(n-2, i) when p divides n.
BigInt sharper_bound(int n, std::int64_t p, int size_l);
// k-wise generalization for profiles (0, ..., 0, L), 0 not in L, L = -L:
// sum_{i<=|L|} C(floor(n / 2^(k-2)) - 2, i) + k - 2 when p | n, with the
// weaker exponent k-3 otherwise.
BigInt generalized_rot_bound(int n, std::int64_t p, int k, int size_l);

struct BoundEntry {
  std::string name;
  std::optional<BigInt> value;          // present iff applicable
  bool applicable = false;
  bool conjectural = false;
  std::string note;
  std::vector<std::string> hypotheses;  // the checks that passed (or failed)
};

struct BoundReport {
  int n = 0;
  std::optional<std::int64_t> p;
  std::string profile;                  // canonical profile text
  std::vector<BoundEntry> entries;
  // Minimum over applicable proven entries; conjectures never count.
  std::optional<BigInt> tightest;
};

// Evaluates every bound whose hypotheses match the profile shape. Bounds
// whose hypotheses fail stay listed without a value, with a note saying why.
BoundReport bound_report(int n, std::optional<std::int64_t> p,
                         const IntersectionProfile& profile);

}  // namespace trislice
