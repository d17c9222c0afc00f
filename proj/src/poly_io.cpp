#include "toricdeg/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "toricdeg/errors.hpp"

namespace toricdeg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vars& vars) : s_(text), vars_(vars) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip();
    }
    terms.push_back(term(negative));
    for (skip(); pos_ < s_.size(); skip()) {
      const char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(pos_, "'+' or '-'");
      ++pos_;
      skip();
      terms.push_back(term(c == '-'));
    }
    return Polynomial(vars_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    const auto start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw SyntaxError(pos_, "digit");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term(bool negative) {
    Term t{1, Exponent(vars_->size())};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den(1);
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        den = Integer(digits());
        if (den == 0) throw SyntaxError(pos_, "nonzero denominator");
        skip();
      }
      t.coeff = Rational(num, den);
      t.coeff.canonicalize();
      if (peek() != '*') need_factor = false;
      else {
        ++pos_;
        skip();
      }
    }
    if (need_factor) {
      factor(t.exp);
      for (skip(); peek() == '*'; skip()) {
        ++pos_;
        skip();
        factor(t.exp);
      }
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  void factor(Exponent& e) {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "identifier");
    const auto start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const auto i = var_index(*vars_, std::string(s_.substr(start, pos_ - start)));
    skip();
    std::int64_t power = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      const auto at = pos_;
      const auto d = digits();
      if (d.size() > 18) throw SyntaxError(at, "exponent below 10^18");
      power = std::stoll(d);
    }
    const std::int64_t total = std::int64_t{e[i]} + power;
    if (total > std::numeric_limits<Exponent::value_type>::max()) throw DegreeOverflow();
    e[i] = static_cast<Exponent::value_type>(total);
  }

  std::string_view s_;
  const Vars& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Vars& vars) { return Parser(text, vars).parse(); }

std::string format_monomial(const Exponent& e, const VarList& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.greater(a.exp, b.exp); });
  std::string out;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const Rational mag = abs(t.coeff);
    const bool unit_coeff = mag == 1;
    if (t.exp.is_zero()) {
      out += mag.get_str();
    } else {
      if (!unit_coeff) out += mag.get_str() + "*";
      out += format_monomial(t.exp, *p.vars());
    }
  }
  return out;
}

std::string format_polynomial(const Polynomial& p) {
  return format_polynomial(p, TermOrder::degrevlex(p.nvars()));
}

}  // namespace toricdeg
