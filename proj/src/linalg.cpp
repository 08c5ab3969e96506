#include "trislice/linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace trislice {

namespace {

void check_dim(int dim) {
  if (dim < 0) fail(ErrorKind::Parameter, "matrix dimension must be nonnegative");
}

std::int64_t mod_reduce(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod prime p via Fermat.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod_reduce(a, p);
  std::int64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result;
}

void check_order(std::span<const int> order, int dim) {
  if (static_cast<int>(order.size()) != dim)
    fail(ErrorKind::Parameter, "order must have one position per index");
  std::vector<char> seen(static_cast<std::size_t>(dim), 0);
  for (int v : order) {
    if (v < 0 || v >= dim || seen[static_cast<std::size_t>(v)])
      fail(ErrorKind::Parameter, "order is not a permutation of 0.." + std::to_string(dim - 1));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

template <class Matrix>
TriangularityCertificate certify(const Matrix& m, std::span<const int> order) {
  check_order(order, m.dim());
  TriangularityCertificate cert;
  std::optional<std::pair<int, int>> lower_violation;  // nonzero strictly above
  std::optional<std::pair<int, int>> upper_violation;  // nonzero strictly below
  cert.diagonal_all_nonzero = true;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (r == c) {
        if (m.is_zero(r, c)) cert.diagonal_all_nonzero = false;
        continue;
      }
      if (m.is_zero(r, c)) continue;
      if (order[static_cast<std::size_t>(r)] < order[static_cast<std::size_t>(c)]) {
        if (!lower_violation) lower_violation = {r, c};
      } else {
        if (!upper_violation) upper_violation = {r, c};
      }
    }
  }
  if (!lower_violation && !upper_violation) {
    cert.shape = TriangularShape::Diagonal;
  } else if (!lower_violation) {
    cert.shape = TriangularShape::LowerTriangular;
  } else if (!upper_violation) {
    cert.shape = TriangularShape::UpperTriangular;
  } else {
    cert.shape = TriangularShape::None;
    // Report whichever offender comes first in row-major scan order.
    auto key = [](const std::pair<int, int>& v) { return std::pair(v.first, v.second); };
    cert.witness = key(*lower_violation) < key(*upper_violation) ? lower_violation
                                                                 : upper_violation;
  }
  return cert;
}

std::vector<int> identity_order(int dim) {
  std::vector<int> order(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
  return order;
}

}  // namespace

ResidueMatrix::ResidueMatrix(std::int64_t p, int dim) : p_(p), dim_(dim) {
  if (!is_prime(p))
    fail(ErrorKind::Parameter, "matrix modulus " + std::to_string(p) + " is not prime");
  check_dim(dim);
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0);
}

std::size_t ResidueMatrix::index(int r, int c) const {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    fail(ErrorKind::Parameter, "matrix index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
         static_cast<std::size_t>(c);
}

void ResidueMatrix::set(int r, int c, std::int64_t value) {
  entries_[index(r, c)] = mod_reduce(value, p_);
}

void ResidueMatrix::dump(std::ostream& out) const {
  out << dim_ << '\n';
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (c > 0) out << ' ';
      out << at(r, c);
    }
    out << '\n';
  }
}

ResidueMatrix ResidueMatrix::parse(std::istream& in, std::int64_t p) {
  int dim = 0;
  if (!(in >> dim)) fail(ErrorKind::Parse, "matrix dump: missing dimension header");
  ResidueMatrix m(p, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      std::int64_t v;
      if (!(in >> v)) fail(ErrorKind::Parse, "matrix dump: not enough entries");
      m.set(r, c, v);
    }
  return m;
}

ExactMatrix::ExactMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Rational(0));
}

std::size_t ExactMatrix::index(int r, int c) const {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    fail(ErrorKind::Parameter, "matrix index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
         static_cast<std::size_t>(c);
}

void ExactMatrix::set(int r, int c, Rational value) { entries_[index(r, c)] = std::move(value); }

void ExactMatrix::dump(std::ostream& out) const {
  out << dim_ << '\n';
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (c > 0) out << ' ';
      const Rational& v = at(r, c);
      out << numerator(v);
      if (denominator(v) != 1) out << '/' << denominator(v);
    }
    out << '\n';
  }
}

ExactMatrix ExactMatrix::parse(std::istream& in) {
  int dim = 0;
  if (!(in >> dim)) fail(ErrorKind::Parse, "matrix dump: missing dimension header");
  ExactMatrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      std::string token;
      if (!(in >> token)) fail(ErrorKind::Parse, "matrix dump: not enough entries");
      try {
        auto slash = token.find('/');
        if (slash == std::string::npos) {
          m.set(r, c, Rational(BigInt(token)));
        } else {
          BigInt num(token.substr(0, slash));
          BigInt den(token.substr(slash + 1));
          if (den == 0) fail(ErrorKind::Parse, "matrix dump: zero denominator");
          m.set(r, c, Rational(num, den));
        }
      } catch (const std::exception&) {
        fail(ErrorKind::Parse, "matrix dump: bad entry '" + token + "'");
      }
    }
  return m;
}

int rank_mod_p(const ResidueMatrix& m) {
  const std::int64_t p = m.modulus();
  const int dim = m.dim();
  std::vector<std::int64_t> work(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      work[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) +
           static_cast<std::size_t>(c)] = m.at(r, c);
  auto cell = [&](int r, int c) -> std::int64_t& {
    return work[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) +
                static_cast<std::size_t>(c)];
  };

  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim; ++r)
      if (cell(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < dim; ++c) std::swap(cell(pivot, c), cell(rank, c));
    std::int64_t inv = mod_inverse(cell(rank, col), p);
    for (int c = col; c < dim; ++c) cell(rank, c) = (cell(rank, c) * inv) % p;
    for (int r = 0; r < dim; ++r) {
      if (r == rank || cell(r, col) == 0) continue;
      std::int64_t factor = cell(r, col);
      for (int c = col; c < dim; ++c)
        cell(r, c) = mod_reduce(cell(r, c) - factor * cell(rank, c), p);
    }
    ++rank;
  }
  return rank;
}

int rank_exact(const ExactMatrix& m) {
  const int dim = m.dim();
  std::vector<Rational> work(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      work[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) +
           static_cast<std::size_t>(c)] = m.at(r, c);
  auto cell = [&](int r, int c) -> Rational& {
    return work[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) +
                static_cast<std::size_t>(c)];
  };

  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim; ++r)
      if (cell(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < dim; ++c) std::swap(cell(pivot, c), cell(rank, c));
    Rational lead = cell(rank, col);
    for (int c = col; c < dim; ++c) cell(rank, c) /= lead;
    for (int r = 0; r < dim; ++r) {
      if (r == rank || cell(r, col) == 0) continue;
      Rational factor = cell(r, col);
      for (int c = col; c < dim; ++c) cell(r, c) -= factor * cell(rank, c);
    }
    ++rank;
  }
  return rank;
}

const char* to_string(TriangularShape shape) noexcept {
  switch (shape) {
    case TriangularShape::LowerTriangular: return "lower-triangular";
    case TriangularShape::UpperTriangular: return "upper-triangular";
    case TriangularShape::Diagonal: return "diagonal";
    case TriangularShape::None: return "none";
  }
  return "?";
}

TriangularityCertificate triangularity(const ResidueMatrix& m, std::span<const int> order) {
  return certify(m, order);
}
TriangularityCertificate triangularity(const ExactMatrix& m, std::span<const int> order) {
  return certify(m, order);
}
TriangularityCertificate triangularity(const ResidueMatrix& m) {
  return certify(m, identity_order(m.dim()));
}
TriangularityCertificate triangularity(const ExactMatrix& m) {
  return certify(m, identity_order(m.dim()));
}

}  // namespace trislice
