#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricdeg/groebner.hpp"
#include "toricdeg/intlat.hpp"

namespace toricdeg {

using RationalVector = std::vector<Rational>;

/// Finitely generated semigroup in ℤ^(1+r). Duplicate generators are dropped on
/// construction. The grading is either a designated degree coordinate (which must be
/// positive on every generator) or the total coordinate sum.
class Semigroup {
 public:
  Semigroup() = default;
  Semigroup(std::vector<IntVector> gens, std::size_t degree_coord = 0, std::vector<std::string> labels = {});
  /// Columns of `M` as generators.
  static Semigroup from_columns(const IntMatrix& M, std::size_t degree_coord = 0, std::vector<std::string> labels = {});
  /// Graded by total degree, as the image of the ι-embedding is.
  static Semigroup total_degree(std::vector<IntVector> gens, std::vector<std::string> labels = {});

  const std::vector<IntVector>& gens() const noexcept { return gens_; }
  /// Degree coordinate; empty when graded by total degree.
  std::optional<std::size_t> degree_coord() const noexcept { return degree_coord_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t dim() const noexcept { return gens_.empty() ? 0 : gens_.front().size(); }
  std::size_t size() const noexcept { return gens_.size(); }

  Integer degree(std::size_t i) const;
  /// Generator without its degree coordinate (the whole vector under total degree).
  IntVector value(std::size_t i) const;
  /// All generators share one degree, which then serves as the grading unit (a Veronese
  /// subsemigroup keeps its degree coordinate n so that Δ is unchanged).
  bool degree_one_generated() const;
  /// Generators as columns, degree coordinate first.
  IntMatrix matrix() const;

 private:
  void normalize();

  std::vector<IntVector> gens_;
  std::optional<std::size_t> degree_coord_ = 0;
  std::vector<std::string> labels_;
};

/// Rational polytope given by its vertices; half-spaces a·x <= b are attached when the
/// hull routine could compute them (full-dimensional, ambient dimension at most 3).
struct PolytopeQ {
  std::vector<RationalVector> vertices;
  std::size_t dim_ambient = 0;
  std::vector<std::pair<RationalVector, Rational>> halfspaces;
  bool has_halfspaces = false;
};

/// Toric ideal of A: kernel binomials saturated by each variable in turn.
Ideal toric_ideal(const IntMatrix& A, const VarList& names, std::stop_token stop = {});

/// p ∈ conv(points), decided exactly by Fourier–Motzkin on the convex-combination system.
bool in_convex_hull(const RationalVector& p, const std::vector<RationalVector>& points);
/// Irredundant vertex list of conv(points) (sorted lexicographically), plus facets when the
/// hull is full-dimensional in dimension <= 3.
PolytopeQ convex_hull(std::vector<RationalVector> points);
/// Δ(S): hull of a / n over generators (n, a).
PolytopeQ delta_polytope(const Semigroup& S);
/// Affine dimension of a point set.
std::size_t affine_dimension(const std::vector<RationalVector>& points);

/// Elements of S of degree exactly n, regraded so that they have degree 1.
Semigroup veronese(const Semigroup& S, unsigned n);

struct SemigroupEmbedding {
  Integer N;
  Semigroup image;
};
/// ι-embedding of a degree-one generated semigroup with non-negative values.
/// Throws NotDegreeOneGenerated.
SemigroupEmbedding embed_semigroup(const Semigroup& S);

/// [∏ t_i^A(i,0) : … ], normalized so that the first nonzero coordinate is 1.
RationalVector torus_point(const IntMatrix& A, const RationalVector& t);

/// Number of distinct m-fold sums of the generators (dim k[S]_m for degree-one S).
std::size_t count_degree_elements(const std::vector<IntVector>& gens, unsigned m);

}  // namespace toricdeg
