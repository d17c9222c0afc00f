#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace toricdeg {

using Rational = mpq_class;
using Integer = mpz_class;

using VarList = std::vector<std::string>;
/// Variable lists are shared between all polynomials of a ring.
using Vars = std::shared_ptr<const VarList>;

Vars make_vars(VarList names);
/// Index of `name` in `vars`; throws UnknownVariable.
std::size_t var_index(const VarList& vars, const std::string& name);

/// Exponent vector of a monomial. Entries are non-negative; arithmetic is overflow checked.
class Exponent {
 public:
  using value_type = std::int32_t;
  using storage = boost::container::small_vector<value_type, 12>;

  Exponent() = default;
  explicit Exponent(std::size_t n) : e_(n, 0) {}
  Exponent(std::initializer_list<value_type> values);
  explicit Exponent(std::span<const value_type> values);

  static Exponent unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const noexcept { return e_[i]; }
  value_type& operator[](std::size_t i) noexcept { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::int64_t degree() const noexcept;
  bool is_zero() const noexcept;
  bool divides(const Exponent& other) const noexcept;
  /// True when no variable occurs in both monomials.
  bool coprime(const Exponent& other) const noexcept;

  friend Exponent operator+(const Exponent& a, const Exponent& b);
  /// Requires b | a.
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend Exponent lcm(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent& a, const Exponent& b) noexcept { return a.e_ == b.e_; }
  friend bool operator<(const Exponent& a, const Exponent& b) noexcept { return a.e_ < b.e_; }

 private:
  storage e_;
};

/// Positive integer degree per variable.
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<std::int32_t> weights);
  static Grading standard(std::size_t n);

  const std::vector<std::int32_t>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  bool is_standard() const noexcept;
  std::int64_t degree(const Exponent& e) const;
  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::vector<std::int32_t> weights_;
};

struct Term {
  Rational coeff;
  Exponent exp;
};

/// Degree reverse lexicographic comparison on the declared variable order (x0 > x1 > ...).
bool degrevlex_greater(const Exponent& a, const Exponent& b) noexcept;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending degrevlex and merged, so two polynomials over the
/// same variable names are equal exactly when their term vectors are equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vars vars);
  Polynomial(Vars vars, std::vector<Term> terms);

  static Polynomial constant(Vars vars, const Rational& c);
  static Polynomial monomial(Vars vars, Exponent exp, const Rational& c = 1);
  static Polynomial variable(Vars vars, std::size_t index);

  const Vars& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  std::int64_t degree() const;
  bool is_homogeneous(const Grading& grading) const;
  /// Indices of variables with a nonzero exponent somewhere.
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial scale(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned n) const;

  Polynomial substitute(std::size_t var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Re-express over `target`: variable i goes to target index map[i]; map[i] < 0 means
  /// the variable must not occur.
  Polynomial rebase(Vars target, std::span<const int> map) const;
  /// Re-express over `target` by matching variable names.
  Polynomial rebase(Vars target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void canonicalize();
  void check_compatible(const Polynomial& other) const;

  Vars vars_;
  std::vector<Term> terms_;
};

bool same_vars(const Vars& a, const Vars& b) noexcept;

}  // namespace toricdeg
