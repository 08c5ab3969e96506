#include "trislice/subset.hpp"

#include <algorithm>
#include <bit>

#include "trislice/numeric.hpp"

namespace trislice {

namespace {

// Element e (1-based) lives in word (e-1)/64 at bit 63 - (e-1)%64.
inline std::uint64_t bit_for(int element) {
  return 1ull << (63 - ((element - 1) & 63));
}
inline int word_for(int element) { return (element - 1) >> 6; }

inline void check_element(int element, int n) {
  if (element < 1 || element > n)
    fail(ErrorKind::Width, "element " + std::to_string(element) +
                               " out of range for ground size " + std::to_string(n));
}

// Bits of the first n element positions set.
inline void ground_mask(int n, std::uint64_t out[2]) {
  if (n >= 64) {
    out[0] = ~0ull;
    out[1] = (n > 64) ? (~0ull << (128 - n)) : 0ull;
  } else {
    out[0] = (~0ull << (64 - n));
    out[1] = 0ull;
  }
}

}  // namespace

Subset Subset::empty(int n) {
  GroundSize g(n);
  return Subset(g.value(), 0, 0);
}

Subset Subset::from_elements(int n, std::span<const int> elements) {
  Subset s = Subset::empty(n);
  for (int e : elements) {
    check_element(e, n);
    s.words_[word_for(e)] |= bit_for(e);
  }
  return s;
}

Subset Subset::of(int n, std::initializer_list<int> elements) {
  return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::full(int n) {
  Subset s = Subset::empty(n);
  ground_mask(n, s.words_);
  return s;
}

Subset Subset::from_lex_rank(int n, std::uint64_t rank) {
  if (n < 1 || n > 64)
    fail(ErrorKind::Parameter, "from_lex_rank supports 1 <= n <= 64");
  if (n < 64 && rank >= (1ull << n))
    fail(ErrorKind::Parameter, "lex rank out of range for ground size " + std::to_string(n));
  Subset s = Subset::empty(n);
  s.words_[0] = n == 64 ? rank : (rank << (64 - n));
  return s;
}

int Subset::size() const noexcept {
  return std::popcount(words_[0]) + std::popcount(words_[1]);
}

bool Subset::contains(int element) const {
  check_element(element, n_);
  return (words_[word_for(element)] & bit_for(element)) != 0;
}

Subset Subset::with(int element) const {
  check_element(element, n_);
  Subset s = *this;
  s.words_[word_for(element)] |= bit_for(element);
  return s;
}

Subset Subset::without(int element) const {
  check_element(element, n_);
  Subset s = *this;
  s.words_[word_for(element)] &= ~bit_for(element);
  return s;
}

Subset Subset::intersect(const Subset& other) const {
  if (n_ != other.n_) fail(ErrorKind::Context, "intersect: mismatched ground sizes");
  return Subset(n_, words_[0] & other.words_[0], words_[1] & other.words_[1]);
}

Subset Subset::unite(const Subset& other) const {
  if (n_ != other.n_) fail(ErrorKind::Context, "unite: mismatched ground sizes");
  return Subset(n_, words_[0] | other.words_[0], words_[1] | other.words_[1]);
}

Subset Subset::complement() const {
  std::uint64_t mask[2];
  ground_mask(n_, mask);
  return Subset(n_, (~words_[0]) & mask[0], (~words_[1]) & mask[1]);
}

bool Subset::subset_of(const Subset& other) const {
  if (n_ != other.n_) fail(ErrorKind::Context, "subset_of: mismatched ground sizes");
  return (words_[0] & other.words_[0]) == words_[0] &&
         (words_[1] & other.words_[1]) == words_[1];
}

Subset Subset::with_ground(int n) const {
  GroundSize g(n);
  std::uint64_t mask[2];
  ground_mask(g.value(), mask);
  if ((words_[0] & ~mask[0]) != 0 || (words_[1] & ~mask[1]) != 0)
    fail(ErrorKind::Width, "subset " + to_string() + " does not fit in ground size " +
                               std::to_string(n));
  return Subset(g.value(), words_[0], words_[1]);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int w = 0; w < 2; ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      int lead = std::countl_zero(bits);
      out.push_back(w * 64 + lead + 1);
      bits &= ~(1ull << (63 - lead));
    }
  }
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  if (n_ != other.n_) fail(ErrorKind::Context, "lex compare: mismatched ground sizes");
  if (words_[0] != other.words_[0])
    return words_[0] < other.words_[0] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  if (words_[1] != other.words_[1])
    return words_[1] < other.words_[1] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<int> char_vector(const Subset& a) {
  std::vector<int> v(static_cast<std::size_t>(a.ground()), 0);
  for (int e : a.elements()) v[static_cast<std::size_t>(e - 1)] = 1;
  return v;
}

std::vector<int> char_vector(const Subset& a, int n) { return char_vector(a.with_ground(n)); }

LexOrder lex_compare(const Subset& x, const Subset& y) {
  auto c = x <=> y;
  if (c == std::strong_ordering::less) return LexOrder::Less;
  if (c == std::strong_ordering::greater) return LexOrder::Greater;
  return LexOrder::Equal;
}

int meet_size(std::span<const Subset> sets, std::optional<std::int64_t> modulus) {
  if (sets.empty()) fail(ErrorKind::Arity, "meet_size: need at least one set");
  if (modulus && !is_prime(*modulus))
    fail(ErrorKind::Parameter, "meet_size: modulus " + std::to_string(*modulus) +
                                   " is not prime");
  Subset meet = sets[0];
  for (std::size_t i = 1; i < sets.size(); ++i) meet = meet.intersect(sets[i]);
  int size = meet.size();
  if (modulus) size = static_cast<int>(size % *modulus);
  return size;
}

bool is_prime(std::int64_t value) noexcept {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::int64_t d = 3; d * d <= value; d += 2)
    if (value % d == 0) return false;
  return true;
}

}  // namespace trislice
