#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trislice/error.hpp"
#include "trislice/numeric.hpp"

namespace trislice {

// Dense square matrix over GF(p); entries always reduced into [0, p).
class ResidueMatrix {
 public:
  ResidueMatrix(std::int64_t p, int dim);

  std::int64_t modulus() const noexcept { return p_; }
  int dim() const noexcept { return dim_; }
  std::int64_t at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, std::int64_t value);
  bool is_zero(int r, int c) const { return at(r, c) == 0; }

  void dump(std::ostream& out) const;
  static ResidueMatrix parse(std::istream& in, std::int64_t p);

 private:
  std::size_t index(int r, int c) const;

  std::int64_t p_;
  int dim_;
  std::vector<std::int64_t> entries_;
};

// Dense square matrix over the rationals. Entries arising from the tensor
// constructions are integers; the rational type carries elimination
// intermediates exactly, with no floating point and no tolerances.
class ExactMatrix {
 public:
  explicit ExactMatrix(int dim);

  int dim() const noexcept { return dim_; }
  const Rational& at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, Rational value);
  bool is_zero(int r, int c) const { return at(r, c) == 0; }

  void dump(std::ostream& out) const;
  static ExactMatrix parse(std::istream& in);

 private:
  std::size_t index(int r, int c) const;

  int dim_;
  std::vector<Rational> entries_;
};

// Rank over GF(p) by exact elimination.
int rank_mod_p(const ResidueMatrix& m);
// Rank over the rationals by exact elimination.
int rank_exact(const ExactMatrix& m);

enum class TriangularShape { LowerTriangular, UpperTriangular, Diagonal, None };

const char* to_string(TriangularShape shape) noexcept;

struct TriangularityCertificate {
  TriangularShape shape = TriangularShape::None;
  bool diagonal_all_nonzero = false;
  // Present exactly when shape is None: an offending (row, col) pair.
  std::optional<std::pair<int, int>> witness;

  bool lower() const noexcept {
    return shape == TriangularShape::LowerTriangular || shape == TriangularShape::Diagonal;
  }
  bool upper() const noexcept {
    return shape == TriangularShape::UpperTriangular || shape == TriangularShape::Diagonal;
  }
};

// Triangularity with respect to a supplied total order: order[i] is the
// position of index i, and must form a permutation of 0..dim-1. Lower
// triangular means every entry with order(row) < order(col) vanishes.
TriangularityCertificate triangularity(const ResidueMatrix& m, std::span<const int> order);
TriangularityCertificate triangularity(const ExactMatrix& m, std::span<const int> order);
// Natural index order.
TriangularityCertificate triangularity(const ResidueMatrix& m);
TriangularityCertificate triangularity(const ExactMatrix& m);

}  // namespace trislice
