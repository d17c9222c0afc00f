#include "toricdeg/term_order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "toricdeg/errors.hpp"

namespace toricdeg {

namespace {

__int128 dot(const WeightVector& w, const Exponent& e) noexcept {
  __int128 s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<__int128>(w[i]) * e[i];
  return s;
}

std::string join(const WeightVector& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  return os.str();
}

}  // namespace

Convention parse_convention(const std::string& text) {
  if (text == "min") return Convention::Min;
  if (text == "max") return Convention::Max;
  throw std::invalid_argument("convention must be 'min' or 'max', got '" + text + "'");
}

std::string to_string(Convention c) { return c == Convention::Min ? "min" : "max"; }

std::int64_t weight_of(const WeightVector& w, const Exponent& e) {
  if (w.size() != e.size()) throw DimensionMismatch("weight length differs from exponent length");
  const __int128 s = dot(w, e);
  if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
    throw DegreeOverflow();
  return static_cast<std::int64_t>(s);
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
  std::vector<std::size_t> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("lex priority must be a permutation");
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.lex_ = std::move(priority);
  std::ostringstream os;
  os << "lex(";
  for (std::size_t i = 0; i < o.lex_.size(); ++i) os << (i ? ">" : "") << "x" << o.lex_[i];
  os << ")";
  o.description_ = os.str();
  return o;
}

TermOrder TermOrder::lex_reversed(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p[i] = nvars - 1 - i;
  return lex(std::move(p));
}

TermOrder TermOrder::degrevlex(std::size_t nvars) {
  TermOrder o;
  o.kind_ = Kind::DegRevLex;
  o.rows_.push_back(WeightVector(nvars, 1));
  for (std::size_t i = nvars; i-- > 1;) {
    WeightVector r(nvars, 0);
    r[i] = -1;
    o.rows_.push_back(std::move(r));
  }
  o.lex_.resize(nvars);
  std::iota(o.lex_.begin(), o.lex_.end(), 0);
  o.description_ = "degrevlex";
  return o;
}

TermOrder TermOrder::weight(WeightVector w, Convention convention, const TermOrder& tie) {
  if (w.size() != tie.nvars()) throw DimensionMismatch("weight vector length differs from variable count");
  TermOrder o;
  o.kind_ = Kind::Weight;
  WeightVector row = w;
  if (convention == Convention::Min)
    for (auto& v : row) v = -v;
  o.rows_.push_back(std::move(row));
  o.rows_.insert(o.rows_.end(), tie.rows_.begin(), tie.rows_.end());
  o.lex_ = tie.lex_;
  o.weight_ = std::move(w);
  o.convention_ = convention;
  o.description_ = "weight[" + join(o.weight_) + "]/" + to_string(convention) + " then " + tie.describe();
  return o;
}

TermOrder TermOrder::matrix(const WeightRows& rows, Convention convention, const TermOrder& tie) {
  TermOrder o;
  o.kind_ = Kind::Matrix;
  for (const auto& r : rows) {
    if (r.size() != tie.nvars()) throw DimensionMismatch("matrix order row length differs from variable count");
    WeightVector row = r;
    if (convention == Convention::Min)
      for (auto& v : row) v = -v;
    o.rows_.push_back(std::move(row));
  }
  o.rows_.insert(o.rows_.end(), tie.rows_.begin(), tie.rows_.end());
  o.lex_ = tie.lex_;
  o.convention_ = convention;
  o.description_ = "matrix(" + std::to_string(rows.size()) + " rows)/" + to_string(convention) + " then " + tie.describe();
  return o;
}

TermOrder TermOrder::elimination(const std::vector<bool>& eliminate) {
  const std::size_t n = eliminate.size();
  TermOrder o;
  o.kind_ = Kind::Elimination;
  auto block = [&](bool which) {
    WeightVector deg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (eliminate[i] == which) deg[i] = 1;
    o.rows_.push_back(std::move(deg));
    for (std::size_t i = n; i-- > 0;) {
      if (eliminate[i] != which) continue;
      WeightVector r(n, 0);
      r[i] = -1;
      o.rows_.push_back(std::move(r));
    }
  };
  block(true);
  block(false);
  o.lex_.resize(n);
  std::iota(o.lex_.begin(), o.lex_.end(), 0);
  o.description_ = "elimination";
  return o;
}

bool TermOrder::greater(const Exponent& a, const Exponent& b) const noexcept {
  if (kind_ == Kind::DegRevLex) return degrevlex_greater(a, b);
  for (const auto& r : rows_) {
    const __int128 da = dot(r, a), db = dot(r, b);
    if (da != db) return da > db;
  }
  for (auto i : lex_)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Ordering TermOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != nvars() || b.size() != nvars())
    throw DimensionMismatch("exponent length differs from order dimension");
  if (greater(a, b)) return Ordering::Greater;
  if (greater(b, a)) return Ordering::Less;
  return Ordering::Equal;
}

std::string TermOrder::describe() const { return description_; }

Polynomial initial_form(const Polynomial& p, const WeightVector& w, Convention convention) {
  return initial_form(p, WeightRows{w}, convention);
}

Polynomial initial_form(const Polynomial& p, const WeightRows& rows, Convention convention) {
  if (p.is_zero()) throw ZeroPolynomial();
  for (const auto& r : rows)
    if (r.size() != p.nvars()) throw DimensionMismatch("weight length differs from variable count");
  // lexicographic comparison of the row-weight vectors, flipped for Max
  auto key = [&](const Exponent& e) {
    std::vector<__int128> k;
    k.reserve(rows.size());
    for (const auto& r : rows) {
      const __int128 v = dot(r, e);
      k.push_back(convention == Convention::Min ? v : -v);
    }
    return k;
  };
  std::vector<std::vector<__int128>> keys;
  keys.reserve(p.size());
  for (const auto& t : p.terms()) keys.push_back(key(t.exp));
  const auto best = *std::min_element(keys.begin(), keys.end());
  std::vector<Term> kept;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i] == best) kept.push_back(p.terms()[i]);
  return Polynomial(p.vars(), std::move(kept));
}

}  // namespace toricdeg
