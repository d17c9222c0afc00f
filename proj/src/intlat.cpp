#include "toricdeg/intlat.hpp"

#include <algorithm>
#include <limits>

#include "toricdeg/errors.hpp"

namespace toricdeg {

namespace {

// r_i <- r_i - q * r_j on both matrices
void row_axpy(IntMatrix& M, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < M.cols(); ++c) M(i, c) -= q * M(j, c);
}

void row_swap(IntMatrix& M, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(i, c), M(j, c));
}

void row_negate(IntMatrix& M, std::size_t i) {
  for (std::size_t c = 0; c < M.cols(); ++c) M(i, c) = -M(i, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<IntVector> big;
  for (const auto& r : rows) {
    IntVector v;
    for (auto x : r) v.emplace_back(static_cast<long>(x));
    big.push_back(std::move(v));
  }
  return from_rows(big);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_int64() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (!x.fits_slong_p()) throw DegreeOverflow();
      out[i][j] = x.get_si();
    }
  return out;
}

WeightRows IntMatrix::to_weight_rows() const { return to_int64(); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product dimensions");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product dimensions");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& A) {
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    // Euclid on column c over rows r.. until one nonzero entry remains
    while (true) {
      std::size_t best = H.rows();
      for (std::size_t i = r; i < H.rows(); ++i)
        if (H(i, c) != 0 && (best == H.rows() || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == H.rows()) break;
      row_swap(H, r, best);
      row_swap(U, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Integer q = H(i, c) / H(r, c);  // truncation keeps |remainder| < |pivot|
        row_axpy(H, i, r, q);
        row_axpy(U, i, r, q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      row_negate(H, r);
      row_negate(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(H(i, c), H(r, c));
      row_axpy(H, i, r, q);
      row_axpy(U, i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }
  return HermiteForm{std::move(H), std::move(U), std::move(pivots)};
}

std::size_t rank(const IntMatrix& A) { return hermite_normal_form(A).pivots.size(); }

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      row_swap(M, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = t;
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::vector<IntVector> kernel_lattice(const IntMatrix& A) {
  const auto hf = hermite_normal_form(A.transpose());
  const std::size_t r = hf.pivots.size();
  std::vector<IntVector> basis;
  for (std::size_t i = r; i < hf.U.rows(); ++i) basis.push_back(hf.U.row(i));
  if (basis.empty()) return basis;
  const auto canon = hermite_normal_form(IntMatrix::from_rows(basis));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < canon.pivots.size(); ++i) out.push_back(canon.H.row(i));
  return out;
}

Integer lattice_index(const std::vector<IntVector>& gens, std::size_t dim) {
  if (gens.empty()) return dim == 0 ? 1 : 0;
  const auto hf = hermite_normal_form(IntMatrix::from_rows(gens));
  if (hf.pivots.size() != dim) return 0;
  Integer idx = 1;
  for (std::size_t i = 0; i < dim; ++i) idx *= hf.H(i, hf.pivots[i]);
  return idx;
}

IntMatrix homogenize_matrix(const IntMatrix& A) {
  IntVector sums(A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j)
    for (std::size_t i = 0; i < A.rows(); ++i) sums[j] += A(i, j);
  Integer c = sums.empty() ? Integer(1) : *std::max_element(sums.begin(), sums.end());
  if (c <= 0) c = 1;
  IntMatrix out(A.rows() + 1, A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    out(0, j) = c - sums[j];
    if (out(0, j) < 0) throw NegativeEntryUnresolvable("column " + std::to_string(j) + " exceeds the target sum");
    for (std::size_t i = 0; i < A.rows(); ++i) out(i + 1, j) = A(i, j);
  }
  return out;
}

IntMatrix iota_matrix(const Integer& N, std::size_t r) {
  if (r == 0) throw std::invalid_argument("iota needs r >= 1");
  IntMatrix m(r + 1, r + 1);
  m(0, 0) = N;
  for (std::size_t j = 1; j <= r; ++j) {
    m(0, j) = -1;
    m(j, j) = 1;
  }
  return m;
}

std::vector<IntVector> iota_images(const Integer& N, const std::vector<IntVector>& gens) {
  std::vector<IntVector> out;
  if (gens.empty()) return out;
  const auto iota = iota_matrix(N, gens.front().size() - 1);
  for (const auto& g : gens) {
    if (g.size() != gens.front().size()) throw DimensionMismatch("generators of different lengths");
    auto img = iota * g;
    for (const auto& x : img)
      if (x < 0) throw NTooSmall("N = " + N.get_str() + " leaves a negative entry in the embedding");
    out.push_back(std::move(img));
  }
  return out;
}

WeightCertificate weight_from_matrix(const Ideal& J, const IntMatrix& M, Convention convention, std::int64_t max_base,
                                     std::stop_token stop) {
  if (M.cols() != J.nvars()) throw DimensionMismatch("one matrix column per variable is required");
  if (M.rows() == 0) throw DimensionMismatch("empty valuation matrix");
  const auto rows = M.to_weight_rows();
  const auto target = initial_ideal(J, rows, convention, stop);
  if (rows.size() == 1) {
    if (!same_ideal(initial_ideal(J, rows.front(), convention, stop), target))
      throw VerificationFailed("weight", "single-row certificate disagrees");
    return {rows.front(), 1};
  }
  const auto G = buchberger(J, TermOrder::matrix(rows, convention, TermOrder::lex_reversed(J.nvars())), stop);
  for (std::int64_t B = 2; B <= max_base; B *= 2) {
    if (stop.stop_requested()) throw Cancelled();
    WeightVector w(J.nvars());
    bool overflow = false;
    for (std::size_t j = 0; j < J.nvars(); ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < rows.size(); ++k) acc = acc * B + rows[k][j];
      if (acc > std::numeric_limits<std::int32_t>::max() || acc < std::numeric_limits<std::int32_t>::min()) overflow = true;
      w[j] = static_cast<std::int64_t>(acc);
    }
    if (overflow) break;
    const bool certified = std::all_of(G.elements().begin(), G.elements().end(), [&](const Polynomial& g) {
      return initial_form(g, w, convention) == initial_form(g, rows, convention);
    });
    if (!certified) continue;
    if (!same_ideal(initial_ideal(J, w, convention, stop), target))
      throw VerificationFailed("weight", "certified weight does not reproduce the matrix initial ideal");
    return {w, B};
  }
  throw NoCertificate("no weight certifies the matrix order up to base " + std::to_string(max_base));
}

}  // namespace toricdeg
