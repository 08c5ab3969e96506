#include "trislice/profile.hpp"

#include <algorithm>

#include "trislice/numeric.hpp"

namespace trislice {

namespace {

std::vector<std::vector<int>> normalize_levels(std::vector<std::vector<int>> levels) {
  if (levels.empty()) fail(ErrorKind::Parameter, "profile needs at least one level");
  for (auto& level : levels) {
    if (level.empty()) fail(ErrorKind::Parameter, "profile levels must be nonempty");
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return levels;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, std::string("profile: bad ") + what + " '" + token + "'");
  }
}

std::vector<std::vector<int>> parse_levels(const std::string& body) {
  std::vector<std::vector<int>> levels;
  for (const std::string& part : split(body, '|')) {
    std::vector<int> level;
    for (const std::string& token : split(part, ','))
      level.push_back(parse_int(token, "level value"));
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace

IntersectionProfile IntersectionProfile::modular(std::int64_t p,
                                                 std::vector<std::vector<int>> levels) {
  if (!is_prime(p))
    fail(ErrorKind::Parameter, "profile modulus " + std::to_string(p) + " is not prime");
  IntersectionProfile out;
  out.mode_ = ProfileMode::Modular;
  out.p_ = p;
  out.levels_ = normalize_levels(std::move(levels));
  for (const auto& level : out.levels_)
    for (int v : level)
      if (v < 0 || v >= p)
        fail(ErrorKind::Parameter, "residue " + std::to_string(v) +
                                       " out of range for modulus " + std::to_string(p));
  return out;
}

IntersectionProfile IntersectionProfile::exact(std::vector<std::vector<int>> levels) {
  IntersectionProfile out;
  out.mode_ = ProfileMode::Exact;
  out.levels_ = normalize_levels(std::move(levels));
  for (const auto& level : out.levels_)
    for (int v : level)
      if (v < 0)
        fail(ErrorKind::Parameter, "exact profile values must be nonnegative, got " +
                                       std::to_string(v));
  return out;
}

IntersectionProfile IntersectionProfile::parse(const std::string& text) {
  auto head = split(text, ':');
  if (head.size() == 2 && head[0] == "exact")
    return IntersectionProfile::exact(parse_levels(head[1]));
  if (head.size() == 3 && head[0] == "mod") {
    int p = parse_int(head[1], "modulus");
    return IntersectionProfile::modular(p, parse_levels(head[2]));
  }
  fail(ErrorKind::Parse,
       "profile must look like mod:p:L1|...|Lk or exact:L1|...|Lk, got '" + text + "'");
}

std::string IntersectionProfile::to_string() const {
  std::string out =
      mode_ == ProfileMode::Modular ? "mod:" + std::to_string(p_) + ":" : "exact:";
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i > 0) out += '|';
    for (std::size_t j = 0; j < levels_[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(levels_[i][j]);
    }
  }
  return out;
}

std::span<const int> IntersectionProfile::level(int i) const {
  if (i < 1 || i > arity())
    fail(ErrorKind::Parameter, "level index " + std::to_string(i) + " out of range");
  return levels_[static_cast<std::size_t>(i - 1)];
}

bool IntersectionProfile::level_allows(int i, int raw_size) const {
  int value = raw_size;
  if (mode_ == ProfileMode::Modular) value = static_cast<int>(value % p_);
  const auto& lv = levels_[static_cast<std::size_t>(i - 1)];
  return std::binary_search(lv.begin(), lv.end(), value);
}

bool IntersectionProfile::level_is(int i, std::initializer_list<int> values) const {
  std::vector<int> v(values);
  std::sort(v.begin(), v.end());
  auto lv = level(i);
  return std::equal(lv.begin(), lv.end(), v.begin(), v.end());
}

bool IntersectionProfile::zero_prefix() const {
  for (int i = 1; i < arity(); ++i)
    if (!level_is(i, {0})) return false;
  return true;
}

bool IntersectionProfile::last_level_symmetric() const {
  if (mode_ != ProfileMode::Modular) return false;
  auto last = level(arity());
  for (int v : last) {
    int neg = static_cast<int>((p_ - v) % p_);
    if (!std::binary_search(last.begin(), last.end(), neg)) return false;
  }
  return true;
}

IntersectionProfile IntersectionProfile::shifted() const {
  if (arity() < 2) fail(ErrorKind::Parameter, "cannot shift a 1-level profile");
  std::vector<std::vector<int>> rest(levels_.begin() + 1, levels_.end());
  return mode_ == ProfileMode::Modular ? modular(p_, std::move(rest))
                                       : exact(std::move(rest));
}

}  // namespace trislice
