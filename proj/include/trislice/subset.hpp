#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trislice/error.hpp"

namespace trislice {

// Subsets of [n] = {1, ..., n} as fixed-width bit-vectors, two 64-bit words.
// Element 1 occupies the most significant compared position, so unsigned
// word comparison realizes "lexicographic from the left-hand side" on
// characteristic vectors with a plain integer compare.
inline constexpr int kMaxGroundSize = 128;

// Validated ground-set size, declared once per family context.
class GroundSize {
 public:
  explicit GroundSize(int n) : n_(n) {
    if (n < 1 || n > kMaxGroundSize)
      fail(ErrorKind::Parameter, "ground size must be in [1, " +
                                     std::to_string(kMaxGroundSize) + "], got " +
                                     std::to_string(n));
  }
  int value() const noexcept { return n_; }

 private:
  int n_;
};

enum class LexOrder { Less, Equal, Greater };

class Subset {
 public:
  // The empty subset of a width-n ground set.
  static Subset empty(int n);
  // Subset from 1-based elements; duplicates collapse, out-of-range is a width error.
  static Subset from_elements(int n, std::span<const int> elements);
  static Subset of(int n, std::initializer_list<int> elements);
  static Subset full(int n);
  // Subset whose characteristic vector is the n-bit binary expansion of
  // rank, most significant bit first; rank order equals lex order. n <= 64.
  static Subset from_lex_rank(int n, std::uint64_t rank);

  int ground() const noexcept { return n_; }
  int size() const noexcept;
  bool is_empty() const noexcept { return words_[0] == 0 && words_[1] == 0; }
  bool contains(int element) const;

  Subset with(int element) const;
  Subset without(int element) const;
  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  // Complement within [n].
  Subset complement() const;
  bool subset_of(const Subset& other) const;

  // Same bits viewed against a wider (or equally wide) ground set.
  Subset with_ground(int n) const;

  // Sorted ascending 1-based element list.
  std::vector<int> elements() const;
  // Canonical text form, e.g. "{1,3,7}"; empty set prints as "{}".
  std::string to_string() const;

  bool operator==(const Subset& other) const noexcept {
    return n_ == other.n_ && words_[0] == other.words_[0] && words_[1] == other.words_[1];
  }
  // Left-lexicographic order on characteristic vectors (requires equal grounds).
  std::strong_ordering operator<=>(const Subset& other) const;

  std::uint64_t word(int i) const noexcept { return words_[i]; }

 private:
  Subset(int n, std::uint64_t w0, std::uint64_t w1) : n_(n), words_{w0, w1} {}

  int n_ = 0;
  std::uint64_t words_[2] = {0, 0};
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9e3779b97f4a7c15ull;
    h ^= s.word(1) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(s.ground()));
  }
};

// Characteristic vector of A: entry i is 1 iff i is an element of A.
std::vector<int> char_vector(const Subset& a);
// Same, re-widthed to ground size n; elements beyond n are a width error.
std::vector<int> char_vector(const Subset& a, int n);

// Total order of characteristic vectors, left-lexicographic. Mismatched
// ground sizes are a context error.
LexOrder lex_compare(const Subset& x, const Subset& y);

// Size of the intersection of all given sets, optionally reduced modulo a
// prime. Empty input is an arity error; a composite modulus is a parameter error.
int meet_size(std::span<const Subset> sets, std::optional<std::int64_t> modulus = {});

}  // namespace trislice
