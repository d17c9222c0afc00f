#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricdeg/groebner.hpp"
#include "toricdeg/intlat.hpp"
#include "toricdeg/toric.hpp"

namespace toricdeg {

/// Ĵ_w ⊂ k[x, t]: every generator carries t^(w·α - min) on its terms (Min convention) or
/// t^(max - w·α) (Max). `t` is the last variable.
struct FamilyIdeal {
  Vars vars;
  std::vector<Polynomial> gens;
  Ideal base;
  WeightVector w;
  Convention convention = Convention::Min;
  /// True when the input generators were not a w-standard basis and the reduced
  /// Gröbner basis was used instead.
  bool from_groebner_basis = false;

  Ideal ideal() const { return Ideal(vars, gens); }
};

FamilyIdeal family_ideal(const Ideal& J, const WeightVector& w, Convention convention = Convention::Min,
                         std::stop_token stop = {});
/// Substitute t = t0; canonical (reduced degrevlex) generators over the base ring.
Ideal fiber(const FamilyIdeal& F, const Rational& t0, std::stop_token stop = {});

struct PipelineResult {
  WeightCertificate certificate;
  Ideal init;
  Semigroup semigroup;  // columns of M with the degree row first
  IntMatrix toric_matrix;
  bool homogenized = false;
  Ideal toric;
  bool binomial_prime = false;
};

/// If the first row of M is not the degree row it is added.
PipelineResult valuation_pipeline(const Ideal& J, const IntMatrix& M, Convention convention,
                                  std::vector<std::string> labels = {}, std::stop_token stop = {});

struct DimensionRow {
  std::int64_t m;
  std::int64_t lhs;
  std::int64_t rhs;
};

struct EmbeddingReport {
  PipelineResult pipeline;
  std::vector<std::size_t> independent_vars;
  /// The quotient by in(J) is finite over the chosen variables. When no subset passes this
  /// test the first independent subset with standard images is used and this is false.
  bool finite_over_subset = false;
  /// "direct" when rows of M already have constant non-negative column sums, else "iota".
  std::string route;
  Integer N;
  std::vector<IntVector> c_vectors;  // one per generator, indexed like the chosen variables
  std::vector<std::string> labels;
  std::vector<Polynomial> images;  // monomials over J's variables
  Ideal kernel_check;
  Ideal toric;
  std::vector<DimensionRow> dims_checked;
};

/// Throws NoIndependentSubset, NotDegreeOneGenerated, or VerificationFailed naming the
/// failing clause ("binomial_prime", "standard", "kernel", "dims").
EmbeddingReport embed_value_semigroup(const Ideal& J, const IntMatrix& M, Convention convention,
                                      std::int64_t degree_bound = 5, std::vector<std::string> labels = {},
                                      std::stop_token stop = {});

struct ProjectionReport {
  WeightVector w;       // 0 on kept, -1 on dropped
  Ideal limit;          // I′
  Ideal cone_part;      // (I′ : 𝔞^∞), 𝔞 the product of dropped variables
  Ideal closure;        // I ∩ k[kept]
  bool scheme_check = false;  // limit with dropped ↦ 0 equals closure
  bool base_locus_empty = false;
  bool set_check = false;     // V(I′) = V(closure + dropped) ∪ V(cone part)
};

ProjectionReport projection_limit(const Ideal& I, const std::vector<std::string>& kept, std::stop_token stop = {});

/// (m, dim (R/I)_m, dim (R/J)_m) for each requested degree.
std::vector<DimensionRow> hilbert_witness(const Ideal& I, const Ideal& J, const std::vector<std::int64_t>& degrees);

}  // namespace toricdeg
