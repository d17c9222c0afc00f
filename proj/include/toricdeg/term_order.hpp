#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toricdeg/polynomial.hpp"

namespace toricdeg {

/// Which extremal weight an initial form selects.
enum class Convention { Min, Max };

enum class Ordering { Less, Equal, Greater };

using WeightVector = std::vector<std::int64_t>;
using WeightRows = std::vector<WeightVector>;

Convention parse_convention(const std::string& text);
std::string to_string(Convention c);

/// A monomial order given by integer weight rows compared one after another,
/// finished by a lexicographic tie-break.
///
/// Under the Min convention smaller weight means larger in the order, so the leading
/// term of a polynomial is always the term its initial form keeps.
class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, Weight, Matrix, Elimination };

  /// `priority[0]` is the largest variable.
  static TermOrder lex(std::vector<std::size_t> priority);
  /// Lex with x_{n-1} > ... > x_0, the default tie-break.
  static TermOrder lex_reversed(std::size_t nvars);
  /// Degree reverse lex with x_0 > x_1 > ... > x_{n-1}.
  static TermOrder degrevlex(std::size_t nvars);
  static TermOrder weight(WeightVector w, Convention convention, const TermOrder& tie);
  static TermOrder matrix(const WeightRows& rows, Convention convention, const TermOrder& tie);
  /// Two blocks: variables flagged in `eliminate` dominate the rest; degrevlex inside each block.
  static TermOrder elimination(const std::vector<bool>& eliminate);

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return lex_.size(); }
  /// Weight vector of a Weight order in the caller's convention (empty otherwise).
  const WeightVector& weight_vector() const noexcept { return weight_; }
  Convention convention() const noexcept { return convention_; }

  /// Throws DimensionMismatch on length mismatch.
  Ordering compare(const Exponent& a, const Exponent& b) const;
  /// Unchecked strict comparison used by the inner loops.
  bool greater(const Exponent& a, const Exponent& b) const noexcept;

  std::string describe() const;

 private:
  TermOrder() = default;

  Kind kind_ = Kind::Lex;
  WeightRows rows_;                  // larger dot product is greater
  std::vector<std::size_t> lex_;     // tie-break priority
  WeightVector weight_;
  Convention convention_ = Convention::Min;
  std::string description_;
};

/// Terms of `p` attaining the extremal value of w·α.
Polynomial initial_form(const Polynomial& p, const WeightVector& w, Convention convention);
/// Terms of `p` whose row-weight vectors are lexicographically extremal.
Polynomial initial_form(const Polynomial& p, const WeightRows& rows, Convention convention);

/// Dot product of an integer weight with an exponent; throws on 64-bit overflow.
std::int64_t weight_of(const WeightVector& w, const Exponent& e);

}  // namespace toricdeg
