#include "trislice/tensors.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "trislice/bounds.hpp"

namespace trislice {

namespace {

void require_lex_sorted(const SetFamily& family, bool force) {
  if (force) return;
  if (!family.is_lex_sorted())
    fail(ErrorKind::Order, "family must be sorted ascending in lex order");
}

void require_size_sorted(const SetFamily& family, bool force) {
  if (force) return;
  for (int i = 0; i + 1 < family.size(); ++i)
    if (family.member(i).size() > family.member(i + 1).size())
      fail(ErrorKind::Order, "family must be sorted ascending by member size");
}

// x_1 + sum_{j>=2} x_j y_j for characteristic vectors of X and Y.
std::int64_t shifted_inner_product(const Subset& x, const Subset& y) {
  Subset meet = x.intersect(y);
  std::int64_t rest = meet.size() - (meet.contains(1) ? 1 : 0);
  return (x.contains(1) ? 1 : 0) + rest;
}

}  // namespace

SnevilyMatrixResult snevily_matrix(const SetFamily& family, std::span<const int> residues,
                                   std::int64_t p, bool force) {
  if (!is_prime(p))
    fail(ErrorKind::Parameter, "modulus " + std::to_string(p) + " is not prime");
  std::vector<int> L(residues.begin(), residues.end());
  std::sort(L.begin(), L.end());
  L.erase(std::unique(L.begin(), L.end()), L.end());
  if (L.empty()) fail(ErrorKind::Parameter, "residue set L must be nonempty");
  for (int l : L)
    if (l < 0 || l >= p)
      fail(ErrorKind::Parameter, "residue " + std::to_string(l) + " out of range mod " +
                                     std::to_string(p));
  require_lex_sorted(family, force);
  if (!force) {
    for (int i = 0; i < family.size(); ++i) {
      int size = static_cast<int>(family.member(i).size() % p);
      if (std::binary_search(L.begin(), L.end(), size))
        fail(ErrorKind::Hypothesis, "member " + std::to_string(i + 1) + " has size " +
                                        std::to_string(size) + " mod " + std::to_string(p) +
                                        " inside L");
    }
    for (int i = 0; i < family.size(); ++i)
      for (int j = i + 1; j < family.size(); ++j) {
        int meet = static_cast<int>(family.member(i).intersect(family.member(j)).size() % p);
        if (!std::binary_search(L.begin(), L.end(), meet))
          fail(ErrorKind::Hypothesis,
               "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") has meet size " + std::to_string(meet) + " mod " + std::to_string(p) +
                   " outside L");
      }
  }

  int m = family.size();
  ResidueMatrix matrix(p, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      std::int64_t base = shifted_inner_product(family.member(r), family.member(c));
      std::int64_t product = 1;
      for (int l : L) product = ((product * ((base - l) % p)) % p + p) % p;
      matrix.set(r, c, product);
    }
  }
  return {matrix, triangularity(matrix)};
}

FranklWilsonMatrixResult frankl_wilson_matrix(const SetFamily& family,
                                              std::span<const int> sizes, bool force) {
  std::vector<int> L(sizes.begin(), sizes.end());
  std::sort(L.begin(), L.end());
  L.erase(std::unique(L.begin(), L.end()), L.end());
  if (L.empty()) fail(ErrorKind::Parameter, "size set L must be nonempty");
  for (int l : L)
    if (l < 0) fail(ErrorKind::Parameter, "intersection sizes must be nonnegative");
  require_size_sorted(family, force);
  if (!force) {
    for (int i = 0; i < family.size(); ++i)
      for (int j = i + 1; j < family.size(); ++j) {
        int meet = family.member(i).intersect(family.member(j)).size();
        if (!std::binary_search(L.begin(), L.end(), meet))
          fail(ErrorKind::Hypothesis,
               "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") has meet size " + std::to_string(meet) + " outside L");
      }
  }

  int m = family.size();
  ExactMatrix matrix(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      std::int64_t inner = family.member(r).intersect(family.member(c)).size();
      int col_size = family.member(c).size();
      BigInt product = 1;
      // The Kronecker delta fires inside every factor whose l equals |Y|.
      for (int l : L) product *= inner - l + (l == col_size ? 1 : 0);
      matrix.set(r, c, Rational(product));
    }
  }
  return {matrix, triangularity(matrix)};
}

LiuMatrixResult liu_matrix(const LiuConfiguration& config, bool force) {
  require_lex_sorted(config.lower, force);
  if (!force) {
    VerificationReport report = verify_liu_config(config);
    if (!report.valid) {
      std::string detail = report.violations.empty() ? "invalid configuration"
                                                     : report.violations.front().describe();
      fail(ErrorKind::Hypothesis, "paired-family hypotheses fail: " + detail);
    }
  }

  int m = config.lower.size();
  ExactMatrix matrix(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      std::int64_t base = shifted_inner_product(config.lower.member(r), config.upper.member(c));
      BigInt product = 1;
      for (int l : config.allowed) product *= base - l;
      matrix.set(r, c, Rational(product));
    }
  }
  return {matrix, triangularity(matrix)};
}

std::vector<int> SliceTerm::monomial_elements() const {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j)
    if (monomial & (1u << j)) out.push_back(j + 1);
  return out;
}

BigInt SliceDecomposition::term_count_bound() const {
  return binomial_sum(m_, std::min(l_, m_));
}

BigInt SliceDecomposition::value(std::uint32_t row, std::uint32_t col) const {
  BigInt sum = 0;
  for (const SliceTerm& term : terms_) {
    if ((term.monomial & col) == term.monomial) sum += term.coeff[row];
  }
  return sum;
}

SliceDecomposition slice_decompose(int l, int m,
                                   const std::vector<std::vector<std::int64_t>>& shifts) {
  if (m < 1 || m > 16)
    fail(ErrorKind::Parameter, "dimension m must be in [1, 16], got " + std::to_string(m));
  if (l < 1) fail(ErrorKind::Parameter, "product length l must be positive");
  if (l > m)
    fail(ErrorKind::Parameter, "product length l = " + std::to_string(l) +
                                   " exceeds dimension m = " + std::to_string(m));
  if (static_cast<int>(shifts.size()) != l)
    fail(ErrorKind::Parameter, "need one shift table per factor");
  const std::uint32_t rows = 1u << m;
  for (const auto& table : shifts)
    if (table.size() != rows)
      fail(ErrorKind::Parameter, "each shift table must cover every row object");

  // Per row object, multiply the factors one at a time over squarefree
  // monomials: (poly) * (sum_j x_j y_j + f) sends coeff[S] to
  // f*coeff[S] + sum over set bits j of x: coeff at S | {j}.
  std::map<std::uint32_t, std::vector<BigInt>> coeff_by_monomial;
  for (std::uint32_t row = 0; row < rows; ++row) {
    std::map<std::uint32_t, BigInt> poly;
    poly[0] = 1;
    for (int i = 0; i < l; ++i) {
      std::map<std::uint32_t, BigInt> next;
      const BigInt f = shifts[static_cast<std::size_t>(i)][row];
      for (const auto& [mono, c] : poly) {
        if (f != 0) next[mono] += c * f;
        std::uint32_t x = row;
        while (x != 0) {
          std::uint32_t j = x & (~x + 1);  // lowest set bit
          next[mono | j] += c;
          x &= x - 1;
        }
      }
      poly = std::move(next);
    }
    for (const auto& [mono, c] : poly) {
      if (c == 0) continue;
      auto it = coeff_by_monomial.find(mono);
      if (it == coeff_by_monomial.end())
        it = coeff_by_monomial.emplace(mono, std::vector<BigInt>(rows, BigInt(0))).first;
      it->second[row] = c;
    }
  }

  std::vector<SliceTerm> terms;
  terms.reserve(coeff_by_monomial.size());
  for (auto& [mono, table] : coeff_by_monomial) {
    SliceTerm term;
    term.monomial = mono;
    term.coeff = std::move(table);
    terms.push_back(std::move(term));
  }
  return SliceDecomposition(l, m, std::move(terms));
}

SliceDecomposition slice_decompose(int l, int m, std::span<const std::int64_t> constant_shifts) {
  if (static_cast<int>(constant_shifts.size()) != l)
    fail(ErrorKind::Parameter, "need one shift per factor");
  if (m < 1 || m > 16)
    fail(ErrorKind::Parameter, "dimension m must be in [1, 16], got " + std::to_string(m));
  std::vector<std::vector<std::int64_t>> tables;
  tables.reserve(static_cast<std::size_t>(l));
  for (std::int64_t f : constant_shifts)
    tables.emplace_back(static_cast<std::size_t>(1u << m), f);
  return slice_decompose(l, m, tables);
}

BigInt product_tensor_value(int l, int m, const std::vector<std::vector<std::int64_t>>& shifts,
                            std::uint32_t row, std::uint32_t col) {
  const std::uint32_t limit = 1u << m;
  if (row >= limit || col >= limit)
    fail(ErrorKind::Parameter, "row/col object outside {0,1}^m");
  BigInt product = 1;
  std::int64_t inner = std::popcount(row & col);
  for (int i = 0; i < l; ++i)
    product *= inner + shifts[static_cast<std::size_t>(i)][row];
  return product;
}

}  // namespace trislice
