#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trislice/error.hpp"

namespace trislice {

// Modular profiles constrain intersection sizes reduced mod a prime p;
// exact profiles constrain the integer sizes themselves. The mode is an
// explicit tag, never inferred from the level values.
enum class ProfileMode { Modular, Exact };

// A k-intersection profile: level i (1-based) lists the values allowed for
// the size of every i-wise intersection of family members.
class IntersectionProfile {
 public:
  static IntersectionProfile modular(std::int64_t p, std::vector<std::vector<int>> levels);
  static IntersectionProfile exact(std::vector<std::vector<int>> levels);

  // Text syntax: "mod:p:L1|L2|...|Lk" or "exact:L1|...|Lk", each level a
  // comma-separated value list, e.g. "mod:2:0|1".
  static IntersectionProfile parse(const std::string& text);
  std::string to_string() const;

  ProfileMode mode() const noexcept { return mode_; }
  std::optional<std::int64_t> modulus() const noexcept {
    if (mode_ == ProfileMode::Modular) return p_;
    return std::nullopt;
  }
  int arity() const noexcept { return static_cast<int>(levels_.size()); }
  // 1-based level accessor; values sorted ascending, deduplicated.
  std::span<const int> level(int i) const;

  // Membership test for a raw intersection size (reduced mod p first in
  // modular mode).
  bool level_allows(int i, int raw_size) const;

  bool level_is(int i, std::initializer_list<int> values) const;
  // True when levels 1..k-1 are all the singleton {0}.
  bool zero_prefix() const;
  // True when the last level L satisfies L = -L (mod p); modular only.
  bool last_level_symmetric() const;

  // The (k-1)-profile (L_2, ..., L_k); requires arity >= 2.
  IntersectionProfile shifted() const;

  bool operator==(const IntersectionProfile& other) const = default;

 private:
  IntersectionProfile() = default;

  ProfileMode mode_ = ProfileMode::Exact;
  std::int64_t p_ = 0;
  std::vector<std::vector<int>> levels_;
};

}  // namespace trislice
