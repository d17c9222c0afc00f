#pragma once

#include <random>
#include <string>
#include <vector>

#include "toricdeg/groebner.hpp"
#include "toricdeg/poly_io.hpp"

namespace testing {

using namespace toricdeg;

inline Vars vars_of(std::initializer_list<const char*> names) {
  VarList v;
  for (auto n : names) v.emplace_back(n);
  return make_vars(std::move(v));
}

inline Polynomial P(const Vars& v, const std::string& s) { return parse_polynomial(s, v); }

inline Ideal ideal_of(const Vars& v, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(parse_polynomial(s, v));
  return Ideal(v, std::move(g));
}

inline Polynomial random_poly(std::mt19937_64& rng, const Vars& v, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms), deg(0, max_deg), coef(-5, 5), den(1, 3);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Exponent e(v->size());
    int budget = deg(rng);
    std::uniform_int_distribution<std::size_t> pick(0, v->size() - 1);
    while (budget-- > 0) e[pick(rng)] += 1;
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    if (c == 0) c = 1;
    terms.push_back(Term{c, e});
  }
  return Polynomial(v, std::move(terms));
}

}  // namespace testing
