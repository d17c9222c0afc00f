#include "toricdeg/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "toricdeg/errors.hpp"

namespace toricdeg {

namespace {

Exponent::value_type checked_add(std::int64_t a, std::int64_t b) {
  const std::int64_t s = a + b;
  if (s > std::numeric_limits<Exponent::value_type>::max()) throw DegreeOverflow();
  return static_cast<Exponent::value_type>(s);
}

}  // namespace

Vars make_vars(VarList names) { return std::make_shared<const VarList>(std::move(names)); }

std::size_t var_index(const VarList& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw UnknownVariable(name);
  return static_cast<std::size_t>(it - vars.begin());
}

bool same_vars(const Vars& a, const Vars& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
  return *a == *b;
}

// ---------------------------------------------------------------------------------------
// Exponent

Exponent::Exponent(std::initializer_list<value_type> values) : e_(values.begin(), values.end()) {
  for (auto v : e_)
    if (v < 0) throw std::invalid_argument("negative exponent");
}

Exponent::Exponent(std::span<const value_type> values) : e_(values.begin(), values.end()) {
  for (auto v : e_)
    if (v < 0) throw std::invalid_argument("negative exponent");
}

Exponent Exponent::unit(std::size_t n, std::size_t i) {
  Exponent e(n);
  e.e_[i] = 1;
  return e;
}

std::int64_t Exponent::degree() const noexcept {
  std::int64_t d = 0;
  for (auto v : e_) d += v;
  return d;
}

bool Exponent::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool Exponent::divides(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Exponent::coprime(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = checked_add(a.e_[i], b.e_[i]);
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool degrevlex_greater(const Exponent& a, const Exponent& b) noexcept {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ---------------------------------------------------------------------------------------
// Grading

Grading::Grading(std::vector<std::int32_t> weights) : weights_(std::move(weights)) {
  for (auto w : weights_)
    if (w <= 0) throw std::invalid_argument("grading weights must be positive");
}

Grading Grading::standard(std::size_t n) { return Grading(std::vector<std::int32_t>(n, 1)); }

bool Grading::is_standard() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
}

std::int64_t Grading::degree(const Exponent& e) const {
  if (e.size() != weights_.size()) throw DimensionMismatch("grading length differs from exponent length");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += std::int64_t{weights_[i]} * e[i];
  return d;
}

// ---------------------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Vars vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(Vars vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exp.size() != nvars()) throw DimensionMismatch("term exponent length differs from variable count");
  canonicalize();
}

Polynomial Polynomial::constant(Vars vars, const Rational& c) {
  const auto n = vars->size();
  return Polynomial(std::move(vars), {Term{c, Exponent(n)}});
}

Polynomial Polynomial::monomial(Vars vars, Exponent exp, const Rational& c) {
  return Polynomial(std::move(vars), {Term{c, std::move(exp)}});
}

Polynomial Polynomial::variable(Vars vars, std::size_t index) {
  const auto n = vars->size();
  return Polynomial(std::move(vars), {Term{1, Exponent::unit(n, index)}});
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return degrevlex_greater(a.exp, b.exp); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
  for (auto& t : merged) t.coeff.canonicalize();
  terms_ = std::move(merged);
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_vars(vars_, other.vars_)) throw DimensionMismatch("polynomials live in different rings");
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

std::int64_t Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().exp.degree();  // degrevlex puts a top-degree term first
}

bool Polynomial::is_homogeneous(const Grading& grading) const {
  if (terms_.empty()) return true;
  const auto d = grading.degree(terms_.front().exp);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return grading.degree(t.exp) == d; });
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.exp[i] != 0; })) out.push_back(i);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(vars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  if (!vars_) vars_ = other.vars_;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && degrevlex_greater(terms_[i].exp, other.terms_[j].exp))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || degrevlex_greater(other.terms_[j].exp, terms_[i].exp)) {
      out.push_back(other.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + other.terms_[j].coeff;
      if (sgn(c) != 0) out.push_back(Term{std::move(c), terms_[i].exp});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.coeff * t.coeff, s.exp + t.exp});
  return Polynomial(a.vars_ ? a.vars_ : b.vars_, std::move(prod));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(vars_, 1);
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  if (var >= nvars()) throw DimensionMismatch("substitution index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    Exponent e = t.exp;
    Rational p = 1;
    for (int k = 0; k < e[var]; ++k) p *= value;
    e[var] = 0;
    out.push_back(Term{c * p, std::move(e)});
  }
  return Polynomial(vars_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw DimensionMismatch("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars(); ++i)
      for (int k = 0; k < t.exp[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::rebase(Vars target, std::span<const int> map) const {
  if (map.size() != nvars()) throw DimensionMismatch("rebase map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e(target->size());
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      if (map[i] < 0) throw DimensionMismatch("variable '" + (*vars_)[i] + "' has no image in the target ring");
      e[static_cast<std::size_t>(map[i])] += t.exp[i];
    }
    out.push_back(Term{t.coeff, std::move(e)});
  }
  return Polynomial(std::move(target), std::move(out));
}

Polynomial Polynomial::rebase(Vars target) const {
  std::vector<int> map(nvars(), -1);
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it != target->end()) map[i] = static_cast<int>(it - target->begin());
  }
  return rebase(std::move(target), map);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_vars(a.vars_, b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

}  // namespace toricdeg
