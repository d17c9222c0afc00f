#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toricdeg/groebner.hpp"
#include "toricdeg/polynomial.hpp"
#include "toricdeg/term_order.hpp"

namespace toricdeg {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  /// Throws DimensionMismatch on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  /// Rows converted to machine integers (DegreeOverflow if they do not fit).
  WeightRows to_weight_rows() const;
  std::vector<std::vector<std::int64_t>> to_int64() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

IntVector operator*(const IntMatrix& a, const IntVector& v);

struct HermiteForm {
  IntMatrix H;  // row echelon, positive pivots, entries above a pivot reduced into [0, pivot)
  IntMatrix U;  // unimodular, H = U * A
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

HermiteForm hermite_normal_form(const IntMatrix& A);
std::size_t rank(const IntMatrix& A);
/// Bareiss fraction-free elimination; square input only.
Integer determinant(const IntMatrix& A);

/// Basis of {u ∈ ℤ^cols : A u = 0}, returned in Hermite normal form.
std::vector<IntVector> kernel_lattice(const IntMatrix& A);

/// Index of the lattice spanned by `gens` inside ℤ^dim; zero when the span is not full rank.
Integer lattice_index(const std::vector<IntVector>& gens, std::size_t dim);

/// Prepends a row so that every column sums to c = max column sum (c = 1 if that is not
/// positive). The added entries are c minus the column sum and therefore non-negative.
IntMatrix homogenize_matrix(const IntMatrix& A);

/// (r+1)×(r+1): first row (N, -1, ..., -1), identity below.
IntMatrix iota_matrix(const Integer& N, std::size_t r);
/// Images of degree-one generators (1, a) under iota_matrix(N, r); throws NTooSmall when
/// an entry would be negative.
std::vector<IntVector> iota_images(const Integer& N, const std::vector<IntVector>& gens);

/// A single weight w with in_w(J) = in_M(J), found as Σ_k B^(d-1-k) row_k for B = 2, 4, 8, …
/// and verified by comparing reduced bases. Throws NoCertificate once B exceeds `max_base`.
struct WeightCertificate {
  WeightVector w;
  std::int64_t base = 0;
};
WeightCertificate weight_from_matrix(const Ideal& J, const IntMatrix& M, Convention convention,
                                     std::int64_t max_base = std::int64_t{1} << 20, std::stop_token stop = {});

}  // namespace toricdeg
