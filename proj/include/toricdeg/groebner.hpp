#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "toricdeg/polynomial.hpp"
#include "toricdeg/term_order.hpp"

namespace toricdeg {

/// Generators plus ambient ring. When a grading is supplied every generator must be
/// homogeneous for it; otherwise the standard grading is reported but not enforced.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Vars vars, std::vector<Polynomial> gens, std::optional<Grading> grading = std::nullopt);

  /// The zero ideal of `vars`.
  static Ideal zero(Vars vars);
  static Ideal unit(Vars vars);

  const Vars& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  const Grading& grading() const noexcept { return grading_; }
  bool has_grading() const noexcept { return graded_; }
  bool is_homogeneous() const;
  bool is_zero() const noexcept { return gens_.empty(); }

 private:
  Vars vars_;
  std::vector<Polynomial> gens_;
  Grading grading_;
  bool graded_ = false;
};

/// Elements are monic and sorted by descending leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(Vars vars, std::vector<Polynomial> elements, std::vector<Exponent> leads, TermOrder order,
                bool reduced);

  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Exponent>& leads() const noexcept { return leads_; }
  const TermOrder& order() const noexcept { return order_; }
  const Vars& vars() const noexcept { return vars_; }
  bool reduced() const noexcept { return reduced_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const noexcept;

  Ideal ideal() const;

 private:
  std::vector<Polynomial> elements_;
  std::vector<Exponent> leads_;
  TermOrder order_;
  Vars vars_;
  bool reduced_;
};

/// Reduced Gröbner basis. Weight and matrix orders need not be well orders, so they are
/// only accepted on homogeneous input (NotHomogeneous otherwise).
GroebnerBasis buchberger(const Ideal& I, const TermOrder& order, std::stop_token stop = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);
Exponent leading_exponent(const Polynomial& p, const TermOrder& order);

/// Reduced degrevlex basis as an Ideal; two ideals are equal iff their canonical forms are.
Ideal canonical(const Ideal& I, std::stop_token stop = {});
bool same_ideal(const Ideal& a, const Ideal& b);
/// Every generator of `a` lies in `b`.
bool ideal_subset(const Ideal& a, const Ideal& b);
bool contains(const Ideal& I, const Polynomial& p);
bool is_unit_ideal(const Ideal& I);
bool is_binomial(const Ideal& I);

Ideal initial_ideal(const Ideal& I, const TermOrder& order, std::stop_token stop = {});
Ideal initial_ideal(const Ideal& I, const WeightVector& w, Convention convention, std::stop_token stop = {});
Ideal initial_ideal(const Ideal& I, const WeightRows& M, Convention convention, std::stop_token stop = {});

/// I ∩ k[keep], returned over the kept variables in their declared order.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep, std::stop_token stop = {});
/// (I : f^∞).
Ideal saturate(const Ideal& I, const Polynomial& f, std::stop_token stop = {});
/// (I : x_var^∞). Homogeneous input uses the revlex trick (x_var smallest, divide out);
/// anything else falls back to saturate().
Ideal saturate_variable(const Ideal& I, std::size_t var, std::stop_token stop = {});
Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// f ∈ rad(I), via 1 ∈ I + (1 - y f).
bool in_radical(const Ideal& I, const Polynomial& f);
/// V(a) = V(b) over the algebraic closure.
bool same_radical(const Ideal& a, const Ideal& b);
/// Kernel of k[source] -> k[target.vars]/target, source_i ↦ images[i].
Ideal ring_map_kernel(const VarList& source, const std::vector<Polynomial>& images, const Ideal& target,
                      std::stop_token stop = {});
/// Replace `vars[var]` by zero in every generator and drop that variable from the ring.
Ideal substitute_zero(const Ideal& I, const std::vector<std::string>& drop);
/// Same generators over a larger or permuted ring (matched by name).
Ideal extend(const Ideal& I, const Vars& target);

std::vector<Exponent> monomials_of_degree(const Grading& grading, std::int64_t degree);
std::vector<Exponent> standard_monomials(const GroebnerBasis& G, const Grading& grading, std::int64_t degree);
std::int64_t graded_dimension(const Ideal& I, std::int64_t degree);

/// "(g1, g2, ...)"; "(0)" for the zero ideal.
std::string format_ideal(const Ideal& I);

}  // namespace toricdeg
