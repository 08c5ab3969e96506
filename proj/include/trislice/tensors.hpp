#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trislice/family.hpp"
#include "trislice/linalg.hpp"
#include "trislice/verify.hpp"

namespace trislice {

struct SnevilyMatrixResult {
  ResidueMatrix matrix;
  TriangularityCertificate certificate;
};

// Matrix of the tensor prod_{l in L} (x_1 + sum_{j>=2} x_j y_j - l) over
// GF(p), rows and columns indexed by the family in its given order. The
// family must be lex-sorted ascending (order error otherwise), member sizes
// mod p must avoid L and pairwise meets mod p must lie in L (hypothesis
// errors name the offender). With force=true the matrix is built anyway and
// the certificate reports what actually holds.
SnevilyMatrixResult snevily_matrix(const SetFamily& family, std::span<const int> residues,
                                   std::int64_t p, bool force = false);

struct FranklWilsonMatrixResult {
  ExactMatrix matrix;
  TriangularityCertificate certificate;
};

// Matrix of the tensor prod_i (<x,y> - l_i + delta_{l_i,|Y|}) over exact
// integers. The family must be sorted ascending by member size (ties in any
// fixed order); pairwise meets must lie in L exactly.
FranklWilsonMatrixResult frankl_wilson_matrix(const SetFamily& family,
                                              std::span<const int> sizes, bool force = false);

struct LiuMatrixResult {
  ExactMatrix matrix;
  TriangularityCertificate certificate;
};

// Matrix of the tensor prod_{l in L} (x_1 + sum_{j>=2} x_j y_j - l) with rows
// from the lower family and columns from the upper family. The lower family
// must be lex-sorted with the upper family permuted in tandem, and the
// configuration must pass verify_liu_config.
LiuMatrixResult liu_matrix(const LiuConfiguration& config, bool force = false);

// One rank-1 term of the multilinear expansion: the monomial y_S together
// with its coefficient on every row object.
struct SliceTerm {
  std::uint32_t monomial = 0;   // bit j-1 set means y_j divides the monomial
  std::vector<BigInt> coeff;    // indexed by row-object bitmask

  std::vector<int> monomial_elements() const;
};

// Expansion of prod_{i=1..l} ((sum_j x_j y_j) + f_i(v1)) over {0,1}-vectors,
// collapsing powers via y_j^2 = y_j. Row and column objects are bitmasks in
// [0, 2^m) with bit j-1 carrying coordinate j.
class SliceDecomposition {
 public:
  SliceDecomposition(int l, int m, std::vector<SliceTerm> terms)
      : l_(l), m_(m), terms_(std::move(terms)) {}

  int product_length() const noexcept { return l_; }
  int dimension() const noexcept { return m_; }
  std::span<const SliceTerm> terms() const noexcept { return terms_; }
  int term_count() const noexcept { return static_cast<int>(terms_.size()); }
  BigInt term_count_bound() const;

  // Value of the reconstructed sum at one (row, col) pair.
  BigInt value(std::uint32_t row, std::uint32_t col) const;

 private:
  int l_, m_;
  std::vector<SliceTerm> terms_;
};

// shifts[i] is the table of f_{i+1} over all 2^m row objects.
SliceDecomposition slice_decompose(int l, int m,
                                   const std::vector<std::vector<std::int64_t>>& shifts);
// Convenience: constant shifts f_i.
SliceDecomposition slice_decompose(int l, int m, std::span<const std::int64_t> constant_shifts);

// Direct evaluation of the product form; the reconstruction's counterpart.
BigInt product_tensor_value(int l, int m, const std::vector<std::vector<std::int64_t>>& shifts,
                            std::uint32_t row, std::uint32_t col);

}  // namespace trislice
