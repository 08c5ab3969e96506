#include "trislice/verify.hpp"

#include <algorithm>

namespace trislice {

namespace {

const char* kind_label(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::TupleValue: return "tuple value";
    case Violation::Kind::FamilyTooSmall: return "family too small";
    case Violation::Kind::Containment: return "containment";
    case Violation::Kind::OwnSize: return "own size";
    case Violation::Kind::CrossMeet: return "cross meet";
  }
  return "?";
}

struct Collector {
  std::vector<Violation>& sink;
  int cap;  // 0 = unlimited
  bool truncated = false;

  // Returns false once the cap is reached; enumeration can stop.
  bool add(Violation v) {
    if (cap > 0 && static_cast<int>(sink.size()) >= cap) {
      truncated = true;
      return false;
    }
    sink.push_back(std::move(v));
    return true;
  }
};

// Colexicographic enumeration of i-subsets: the largest index varies in the
// outermost loop, so tuples arrive ordered by their top element first.
// Meets accumulate top-down along the recursion.
bool enumerate_level(const SetFamily& family, const IntersectionProfile& profile, int level,
                     int depth_left, int below, const Subset& meet_so_far,
                     std::vector<int>& picked, Collector& collector) {
  if (depth_left == 0) {
    int observed = meet_so_far.size();
    if (!profile.level_allows(level, observed)) {
      Violation v;
      v.kind = Violation::Kind::TupleValue;
      v.indices.assign(picked.rbegin(), picked.rend());
      v.level = level;
      v.observed = profile.modulus() ? observed % static_cast<int>(*profile.modulus())
                                     : observed;
      if (!collector.add(std::move(v))) return false;
    }
    return true;
  }
  for (int top = depth_left - 1; top < below; ++top) {
    picked.push_back(top);
    Subset meet = picked.size() == 1 ? family.member(top)
                                     : meet_so_far.intersect(family.member(top));
    bool keep_going =
        enumerate_level(family, profile, level, depth_left - 1, top, meet, picked, collector);
    picked.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

std::string Violation::describe() const {
  std::string out = kind_label(kind);
  if (!indices.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(indices[i] + 1);
    }
    out += ")";
  }
  if (level > 0) out += " level " + std::to_string(level);
  out += ", observed " + std::to_string(observed);
  return out;
}

VerificationReport verify_family(const SetFamily& family, const IntersectionProfile& profile,
                                 const VerifyOptions& options) {
  VerificationReport report;
  Collector collector{report.violations, options.violation_cap};
  int k = profile.arity();
  int m = family.size();

  if (m < k) {
    Violation v;
    v.kind = Violation::Kind::FamilyTooSmall;
    v.level = k;
    v.observed = m;
    collector.add(std::move(v));
  }

  std::vector<int> picked;
  Subset unit = Subset::empty(family.ground());
  for (int level = 1; level <= std::min(k, m); ++level) {
    if (!enumerate_level(family, profile, level, level, m, unit, picked, collector)) break;
  }

  report.truncated = collector.truncated;
  report.valid = report.violations.empty() && !report.truncated;
  return report;
}

LiuConfiguration::LiuConfiguration(SetFamily lower_in, SetFamily upper_in,
                                   std::vector<int> allowed_in)
    : lower(std::move(lower_in)), upper(std::move(upper_in)), allowed(std::move(allowed_in)) {
  if (lower.size() != upper.size())
    fail(ErrorKind::Parameter, "paired families must have equal size, got " +
                                   std::to_string(lower.size()) + " and " +
                                   std::to_string(upper.size()));
  if (lower.ground() != upper.ground())
    fail(ErrorKind::Context, "paired families must share a ground size");
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  for (int v : allowed)
    if (v < 0) fail(ErrorKind::Parameter, "allowed intersection sizes must be nonnegative");
}

VerificationReport verify_liu_config(const LiuConfiguration& config,
                                     const VerifyOptions& options) {
  VerificationReport report;
  Collector collector{report.violations, options.violation_cap};
  const auto& L = config.allowed;
  auto in_L = [&](int v) { return std::binary_search(L.begin(), L.end(), v); };
  int m = config.lower.size();

  for (int r = 0; r < m; ++r) {
    const Subset& a = config.lower.member(r);
    if (!a.subset_of(config.upper.member(r))) {
      Violation v;
      v.kind = Violation::Kind::Containment;
      v.indices = {r};
      v.observed = a.size();
      if (!collector.add(std::move(v))) break;
    }
    if (in_L(a.size())) {
      Violation v;
      v.kind = Violation::Kind::OwnSize;
      v.indices = {r};
      v.observed = a.size();
      if (!collector.add(std::move(v))) break;
    }
  }
  for (int r = 0; r < m && !collector.truncated; ++r) {
    for (int s = 0; s < m; ++s) {
      if (r == s) continue;
      int meet = config.lower.member(r).intersect(config.upper.member(s)).size();
      if (!in_L(meet)) {
        Violation v;
        v.kind = Violation::Kind::CrossMeet;
        v.indices = {r, s};
        v.observed = meet;
        if (!collector.add(std::move(v))) break;
      }
    }
  }

  report.truncated = collector.truncated;
  report.valid = report.violations.empty() && !report.truncated;
  return report;
}

}  // namespace trislice
