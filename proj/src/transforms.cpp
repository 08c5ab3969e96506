#include "trislice/transforms.hpp"

#include <algorithm>

#include "trislice/verify.hpp"

namespace trislice {

namespace {

// Shared preconditions of the complement-style transforms: modular profile
// of shape (0, ..., 0, L), p | n, L = -L.
void check_complement_preconditions(const SetFamily& family,
                                    const IntersectionProfile& profile) {
  if (profile.mode() != ProfileMode::Modular)
    fail(ErrorKind::Precondition, "complement transforms need a modular profile");
  std::int64_t p = *profile.modulus();
  if (family.ground() % p != 0)
    fail(ErrorKind::Precondition, "modulus must divide ground size: " + std::to_string(p) +
                                      " does not divide " + std::to_string(family.ground()));
  if (!profile.zero_prefix())
    fail(ErrorKind::Precondition, "profile must have shape (0, ..., 0, L)");
  if (!profile.last_level_symmetric())
    fail(ErrorKind::Precondition, "last level must satisfy L = -L mod p");
}

void reverify_or_die(const SetFamily& input, const SetFamily& output,
                     const IntersectionProfile& profile, const char* what) {
  if (!verify_family(input, profile).valid) return;  // conclusion is conditional
  if (!verify_family(output, profile).valid)
    fail(ErrorKind::Internal, std::string(what) +
                                  ": output fails verification although the input verified; "
                                  "this contradicts the underlying lemma");
}

}  // namespace

SetFamily complement_replace(const SetFamily& family, int index,
                             const IntersectionProfile& profile,
                             const TransformOptions& options) {
  check_complement_preconditions(family, profile);
  if (index < 0 || index >= family.size())
    fail(ErrorKind::Parameter, "member index " + std::to_string(index) + " out of range");
  SetFamily out = family.with_replaced(index, family.member(index).complement());
  if (options.reverify) reverify_or_die(family, out, profile, "complement_replace");
  return out;
}

TraceResult trace(const SetFamily& family, int gamma, const IntersectionProfile& profile,
                  const TransformOptions& options) {
  int k = profile.arity();
  if (k < 2) fail(ErrorKind::Precondition, "trace needs a profile of arity at least 2");
  if (gamma < 0 || gamma >= family.size())
    fail(ErrorKind::Parameter, "member index " + std::to_string(gamma) + " out of range");

  // Find the smallest t > 1 with L_t and L_{t+1} disjoint; without one the
  // traced members are not guaranteed distinct.
  int t = 0;
  for (int candidate = 2; candidate + 1 <= k; ++candidate) {
    auto a = profile.level(candidate);
    auto b = profile.level(candidate + 1);
    bool overlap = false;
    for (int v : a)
      if (std::binary_search(b.begin(), b.end(), v)) {
        overlap = true;
        break;
      }
    if (!overlap) {
      t = candidate;
      break;
    }
  }
  if (t == 0)
    fail(ErrorKind::Precondition,
         "no level t > 1 with L_t and L_{t+1} disjoint; traces may collide");
  if (family.ground() <= t)
    fail(ErrorKind::Precondition, "need ground size n > t = " + std::to_string(t));
  if (!verify_family(family, profile).valid)
    fail(ErrorKind::Precondition, "family does not verify under the given profile");

  const Subset& pivot = family.member(gamma);
  std::vector<int> pivot_elements = pivot.elements();
  if (pivot_elements.empty())
    fail(ErrorKind::Internal, "trace pivot is empty; the profile should forbid this");
  int new_ground = static_cast<int>(pivot_elements.size());

  std::vector<std::pair<int, int>> relabel;
  std::vector<int> new_label(static_cast<std::size_t>(family.ground()) + 1, 0);
  relabel.reserve(pivot_elements.size());
  for (std::size_t i = 0; i < pivot_elements.size(); ++i) {
    relabel.emplace_back(pivot_elements[i], static_cast<int>(i + 1));
    new_label[static_cast<std::size_t>(pivot_elements[i])] = static_cast<int>(i + 1);
  }

  SetFamily traced(new_ground);
  for (int i = 0; i < family.size(); ++i) {
    if (i == gamma) continue;
    std::vector<int> mapped;
    for (int e : family.member(i).intersect(pivot).elements())
      mapped.push_back(new_label[static_cast<std::size_t>(e)]);
    Subset image = Subset::from_elements(new_ground, mapped);
    if (traced.contains(image))
      fail(ErrorKind::Internal,
           "traced members collide at " + image.to_string() +
               " despite disjoint consecutive levels; this contradicts the lemma");
    traced.push_back(std::move(image));
  }

  TraceResult result{std::move(traced), profile.shifted(), std::move(relabel), t};
  if (options.reverify && !verify_family(result.family, result.profile).valid)
    fail(ErrorKind::Internal,
         "trace output fails verification under the shifted profile; "
         "this contradicts the lemma");
  return result;
}

SetFamily shrink_small(const SetFamily& family, const IntersectionProfile& profile,
                       const TransformOptions& options) {
  check_complement_preconditions(family, profile);
  SetFamily out = family;
  for (int i = 0; i < out.size(); ++i) {
    if (2 * out.member(i).size() <= out.ground()) continue;
    Subset complemented = out.member(i).complement();
    try {
      out = out.with_replaced(i, complemented);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Duplication)
        fail(ErrorKind::Duplication,
             "complementing member " + std::to_string(i + 1) + " to " +
                 complemented.to_string() + " duplicates an existing member");
      throw;
    }
  }
  if (options.reverify) reverify_or_die(family, out, profile, "shrink_small");
  return out;
}

}  // namespace trislice
