#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trislice/family.hpp"
#include "trislice/profile.hpp"

namespace trislice {

struct Violation {
  enum class Kind {
    TupleValue,     // an i-wise intersection size fell outside level i
    FamilyTooSmall, // fewer members than the profile arity
    Containment,    // paired-family check: lower member not inside its upper
    OwnSize,        // paired-family check: |A_r| lies in the forbidden set
    CrossMeet,      // paired-family check: |A_r ∩ B_s| outside the allowed set
  };

  Kind kind = Kind::TupleValue;
  std::vector<int> indices;  // offending member indices, 0-based, ascending
  int level = 0;             // tuple size i for TupleValue, else 0
  int observed = 0;          // the value that was out of place

  std::string describe() const;
};

struct VerificationReport {
  bool valid = false;
  std::vector<Violation> violations;
  bool truncated = false;  // true when the violation cap cut enumeration short
};

struct VerifyOptions {
  // Stop collecting after this many violations; 0 means enumerate all.
  int violation_cap = 32;
};

// Decides whether F satisfies the profile: |F| >= k and, for every level i
// and every i-subset of members (enumerated colexicographically), the meet
// size lies in level i.
VerificationReport verify_family(const SetFamily& family, const IntersectionProfile& profile,
                                 const VerifyOptions& options = {});

// Paired families for the cross-intersection check: lower members must sit
// inside their upper partners, own sizes avoid L, cross meets land in L.
struct LiuConfiguration {
  SetFamily lower;
  SetFamily upper;
  std::vector<int> allowed;  // the integer set L, exact sizes

  LiuConfiguration(SetFamily lower_in, SetFamily upper_in, std::vector<int> allowed_in);
};

VerificationReport verify_liu_config(const LiuConfiguration& config,
                                     const VerifyOptions& options = {});

}  // namespace trislice
