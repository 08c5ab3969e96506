#include "trislice/bounds.hpp"

#include <algorithm>

namespace trislice {

BigInt binomial(std::int64_t a, std::int64_t i) {
  if (a < 0)
    fail(ErrorKind::Parameter, "binomial: negative top argument " + std::to_string(a));
  if (i < 0) fail(ErrorKind::Parameter, "binomial: negative index " + std::to_string(i));
  if (i > a) return 0;
  i = std::min(i, a - i);
  BigInt result = 1;
  for (std::int64_t t = 1; t <= i; ++t) {
    result *= (a - i + t);
    result /= t;  // exact at every step
  }
  return result;
}

BigInt binomial_sum(std::int64_t a, std::int64_t top) {
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= top; ++i) sum += binomial(a, i);
  return sum;
}

BigInt snevily_bound(int n, int s) {
  if (s < 0 || s > n - 1)
    fail(ErrorKind::Parameter,
         "snevily_bound needs 0 <= s <= n-1, got s=" + std::to_string(s) +
             ", n=" + std::to_string(n));
  return binomial_sum(n - 1, s);
}

BigInt frankl_wilson_bound(int n, int s) {
  if (s < 0 || s > n)
    fail(ErrorKind::Parameter, "frankl_wilson_bound needs 0 <= s <= n, got s=" +
                                   std::to_string(s) + ", n=" + std::to_string(n));
  return binomial_sum(n, s);
}

BigInt fw_positive_L_bound(int n, int s) { return snevily_bound(n, s); }

BigInt snevily_conjecture_value(int n, int s) {
  if (s < 0 || s > n)
    fail(ErrorKind::Parameter, "conjecture value needs 0 <= s <= n, got s=" +
                                   std::to_string(s) + ", n=" + std::to_string(n));
  return binomial(n, s);
}

BigInt sharper_bound(int n, std::int64_t p, int size_l) {
  if (!is_prime(p))
    fail(ErrorKind::Parameter, "sharper_bound: modulus " + std::to_string(p) + " is not prime");
  if (size_l < 1) fail(ErrorKind::Parameter, "sharper_bound needs |L| >= 1");
  if (n % p == 0) {
    if (n < 2) fail(ErrorKind::Parameter, "sharper_bound needs n >= 2 when p divides n");
    return binomial_sum(n - 2, size_l);
  }
  return binomial_sum(n - 1, size_l);
}

BigInt generalized_rot_bound(int n, std::int64_t p, int k, int size_l) {
  if (!is_prime(p))
    fail(ErrorKind::Parameter,
         "generalized_rot_bound: modulus " + std::to_string(p) + " is not prime");
  if (k <= 2) fail(ErrorKind::Parameter, "generalized_rot_bound needs k > 2");
  if (size_l < 1) fail(ErrorKind::Parameter, "generalized_rot_bound needs |L| >= 1");
  int shift = (n % p == 0) ? k - 2 : k - 3;
  std::int64_t reduced = n;
  for (int i = 0; i < shift; ++i) reduced /= 2;
  if (reduced < 2)
    fail(ErrorKind::Parameter,
         "generalized_rot_bound: floor(n / 2^" + std::to_string(shift) + ") = " +
             std::to_string(reduced) + " < 2, the binomial top would be negative");
  return binomial_sum(reduced - 2, size_l) + (k - 2);
}

namespace {

bool disjoint(std::span<const int> a, std::span<const int> b) {
  for (int v : a)
    if (std::binary_search(b.begin(), b.end(), v)) return false;
  return true;
}

bool contains_value(std::span<const int> a, int v) {
  return std::binary_search(a.begin(), a.end(), v);
}

BoundEntry inapplicable(std::string name, std::string note, bool conjectural = false) {
  BoundEntry e;
  e.name = std::move(name);
  e.note = std::move(note);
  e.conjectural = conjectural;
  return e;
}

BoundEntry applicable(std::string name, BigInt value, std::string note,
                      std::vector<std::string> hypotheses, bool conjectural = false) {
  BoundEntry e;
  e.name = std::move(name);
  e.value = std::move(value);
  e.applicable = true;
  e.conjectural = conjectural;
  e.note = std::move(note);
  e.hypotheses = std::move(hypotheses);
  return e;
}

}  // namespace

BoundReport bound_report(int n, std::optional<std::int64_t> p,
                         const IntersectionProfile& profile) {
  if (profile.modulus() && p && *profile.modulus() != *p)
    fail(ErrorKind::Parameter, "profile modulus " + std::to_string(*profile.modulus()) +
                                   " disagrees with p=" + std::to_string(*p));
  BoundReport report;
  report.n = n;
  report.p = profile.modulus() ? profile.modulus() : p;
  report.profile = profile.to_string();

  int k = profile.arity();
  bool modular = profile.mode() == ProfileMode::Modular;

  // Pairwise modular bound and its conjectured strengthening.
  if (modular && k == 2 && disjoint(profile.level(1), profile.level(2))) {
    int s = static_cast<int>(profile.level(2).size());
    if (s <= n - 1) {
      report.entries.push_back(applicable(
          "snevily", snevily_bound(n, s), "pairwise modular bound, s = |L_2|",
          {"mode is modular", "arity 2", "L_1 and L_2 disjoint", "s <= n-1"}));
      report.entries.push_back(applicable(
          "snevily_conjecture", snevily_conjecture_value(n, s),
          "conjectured, not a theorem", {"same hypotheses as snevily"}, true));
    } else {
      report.entries.push_back(
          inapplicable("snevily", "|L_2| exceeds n-1, formula undefined"));
    }
  } else if (modular && k == 2) {
    report.entries.push_back(inapplicable("snevily", "L_1 and L_2 are not disjoint"));
  }

  // Sharper pairwise bound for profiles (0, L) with symmetric L.
  if (modular && k == 2) {
    bool zero_first = profile.level_is(1, {0});
    bool symmetric = profile.last_level_symmetric();
    bool zero_free = !contains_value(profile.level(2), 0);
    if (zero_first && symmetric && zero_free) {
      report.entries.push_back(applicable(
          "sharper", sharper_bound(n, *profile.modulus(),
                                   static_cast<int>(profile.level(2).size())),
          n % *profile.modulus() == 0 ? "p divides n branch" : "p does not divide n branch",
          {"mode is modular", "arity 2", "L_1 = {0}", "L_2 = -L_2", "0 not in L_2"}));
    } else if (zero_first) {
      report.entries.push_back(inapplicable(
          "sharper", !symmetric ? "L_2 is not symmetric (L != -L)" : "0 lies in L_2"));
    }
  }

  // k-wise bound for profiles (0, ..., 0, L).
  if (modular && k > 2) {
    bool shape = profile.zero_prefix();
    bool symmetric = profile.last_level_symmetric();
    bool zero_free = !contains_value(profile.level(k), 0);
    if (shape && symmetric && zero_free) {
      try {
        BigInt value = generalized_rot_bound(n, *profile.modulus(), k,
                                             static_cast<int>(profile.level(k).size()));
        report.entries.push_back(applicable(
            "generalized_reverse_oddtown", std::move(value),
            n % *profile.modulus() == 0 ? "p divides n branch" : "p does not divide n branch",
            {"mode is modular", "arity > 2", "levels 1..k-1 are {0}", "L = -L",
             "0 not in L"}));
      } catch (const Error& e) {
        report.entries.push_back(inapplicable("generalized_reverse_oddtown", e.what()));
      }
    } else if (shape) {
      report.entries.push_back(inapplicable(
          "generalized_reverse_oddtown",
          !symmetric ? "last level is not symmetric (L != -L)" : "0 lies in the last level"));
    }
  }

  // Exact pairwise bounds.
  if (!modular && k == 2) {
    int s = static_cast<int>(profile.level(2).size());
    if (s <= n) {
      report.entries.push_back(applicable(
          "frankl_wilson", frankl_wilson_bound(n, s), "pairwise exact bound, s = |L_2|",
          {"mode is exact", "arity 2", "s <= n"}));
    } else {
      report.entries.push_back(
          inapplicable("frankl_wilson", "|L_2| exceeds n, formula undefined"));
    }
    if (!contains_value(profile.level(2), 0) && s <= n - 1) {
      report.entries.push_back(applicable(
          "frankl_wilson_positive", fw_positive_L_bound(n, s),
          "exact bound for strictly positive L",
          {"mode is exact", "arity 2", "0 not in L_2", "s <= n-1"}));
    } else {
      report.entries.push_back(inapplicable(
          "frankl_wilson_positive",
          contains_value(profile.level(2), 0) ? "0 lies in L_2" : "|L_2| exceeds n-1"));
    }
  }

  for (const BoundEntry& e : report.entries) {
    if (!e.applicable || e.conjectural) continue;
    if (!report.tightest || *e.value < *report.tightest) report.tightest = e.value;
  }
  return report;
}

}  // namespace trislice
