#include "toricdeg/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <limits>

#include "toricdeg/errors.hpp"
#include "toricdeg/poly_io.hpp"

namespace toricdeg {

namespace {

// Polynomials inside the algorithm keep their terms sorted by the active order.
using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& p, const TermOrder& order) {
  Terms t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.exp, b.exp); });
  return t;
}

void make_monic(Terms& p) {
  if (p.empty() || p.front().coeff == 1) return;
  const Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

// p - c * x^shift * g, all sorted by `order`. `skip` drops that many leading terms of
// both operands (they are known to cancel).
Terms sub_mul(const Terms& p, const Rational& c, const Exponent& shift, const Terms& g, const TermOrder& order,
              std::size_t skip = 0) {
  Terms out;
  out.reserve(p.size() + g.size());
  std::size_t i = skip, j = skip;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Exponent e = g[j].exp + shift;
    if (i == p.size() || order.greater(e, p[i].exp)) {
      out.push_back(Term{-c * g[j].coeff, std::move(e)});
      ++j;
    } else if (order.greater(p[i].exp, e)) {
      out.push_back(p[i++]);
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (sgn(v) != 0) out.push_back(Term{std::move(v), std::move(e)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reducer {
  const std::vector<Terms>& polys;
  const std::vector<std::size_t>& active;
  const TermOrder& order;

  const Terms* divisor(const Exponent& e, Exponent& shift) const {
    for (auto k : active) {
      const auto& lead = polys[k].front().exp;
      if (lead.divides(e)) {
        shift = e - lead;
        return &polys[k];
      }
    }
    return nullptr;
  }

  // Full reduction: no term of the result is divisible by a leading term.
  Terms reduce(Terms p, const std::stop_token& stop) const {
    Terms rest;
    std::size_t steps = 0;
    while (!p.empty()) {
      if ((++steps & 0xff) == 0 && stop.stop_requested()) throw Cancelled();
      Exponent shift;
      if (const Terms* g = divisor(p.front().exp, shift)) {
        const Rational c = p.front().coeff;  // g is monic
        p = sub_mul(p, c, shift, *g, order, 1);
      } else {
        rest.push_back(std::move(p.front()));
        p.erase(p.begin());
      }
    }
    return rest;
  }
};

struct Pair {
  std::size_t i, j;
  Exponent lcm;
  std::int64_t degree;
};

Terms spoly(const Terms& f, const Terms& g, const Exponent& l, const TermOrder& order) {
  // both monic
  Terms a = sub_mul(Terms{}, Rational(-1), l - f.front().exp, f, order);
  a = sub_mul(a, Rational(1), l - g.front().exp, g, order);
  return a;
}

void check_order_applicable(const Ideal& I, const TermOrder& order) {
  const auto k = order.kind();
  if ((k == TermOrder::Kind::Weight || k == TermOrder::Kind::Matrix) && !I.is_homogeneous())
    throw NotHomogeneous("weight and matrix orders require a homogeneous ideal");
}

Polynomial to_poly(const Vars& vars, Terms t) { return Polynomial(vars, std::move(t)); }

}  // namespace

// ---------------------------------------------------------------------------------------
// Ideal

Ideal::Ideal(Vars vars, std::vector<Polynomial> gens, std::optional<Grading> grading) : vars_(std::move(vars)) {
  if (!vars_) vars_ = make_vars({});
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_vars(g.vars(), vars_)) throw DimensionMismatch("generator lives in a different ring");
    gens_.push_back(std::move(g));
  }
  if (grading) {
    if (grading->size() != vars_->size()) throw DimensionMismatch("grading length differs from variable count");
    grading_ = std::move(*grading);
    graded_ = true;
    for (const auto& g : gens_)
      if (!g.is_homogeneous(grading_)) throw NotHomogeneous("generator " + format_polynomial(g) + " is not homogeneous");
  } else {
    grading_ = Grading::standard(vars_->size());
  }
}

Ideal Ideal::zero(Vars vars) { return Ideal(std::move(vars), {}); }

Ideal Ideal::unit(Vars vars) {
  auto one = Polynomial::constant(vars, 1);
  return Ideal(std::move(vars), {std::move(one)});
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const Polynomial& g) { return g.is_homogeneous(grading_); });
}

// ---------------------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(Vars vars, std::vector<Polynomial> elements, std::vector<Exponent> leads, TermOrder order,
                             bool reduced)
    : elements_(std::move(elements)), leads_(std::move(leads)), order_(std::move(order)), vars_(std::move(vars)),
      reduced_(reduced) {}

bool GroebnerBasis::is_unit() const noexcept { return leads_.size() == 1 && leads_.front().is_zero(); }

Ideal GroebnerBasis::ideal() const {
  return Ideal(vars_, elements_);
}

Exponent leading_exponent(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw ZeroPolynomial();
  const auto terms = p.terms();
  const Term* best = &terms[0];
  for (const auto& t : terms)
    if (order.greater(t.exp, best->exp)) best = &t;
  return best->exp;
}

GroebnerBasis buchberger(const Ideal& I, const TermOrder& order, std::stop_token stop) {
  if (order.nvars() != I.nvars()) throw DimensionMismatch("order dimension differs from variable count");
  check_order_applicable(I, order);

  std::vector<Terms> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  const Reducer red{polys, active, order};

  // Gebauer–Möller installation of a new element h = polys.back().
  auto update = [&] {
    const std::size_t h = polys.size() - 1;
    const Exponent& lh = polys[h].front().exp;
    std::vector<Pair> C, D;
    for (auto g : active) {
      Exponent l = lcm(polys[g].front().exp, lh);
      const auto d = l.degree();
      C.push_back(Pair{g, h, std::move(l), d});
    }
    auto coprime = [&](const Pair& p) { return polys[p.i].front().exp.coprime(lh); };
    for (std::size_t k = 0; k < C.size(); ++k) {
      const auto& l = C[k].lcm;
      const bool dominated =
          std::any_of(C.begin() + static_cast<std::ptrdiff_t>(k) + 1, C.end(), [&](const Pair& q) { return q.lcm.divides(l); }) ||
          std::any_of(D.begin(), D.end(), [&](const Pair& q) { return q.lcm.divides(l); });
      if (coprime(C[k]) || !dominated) D.push_back(C[k]);
    }
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      return lcm(polys[p.i].front().exp, lh) != p.lcm && lcm(polys[p.j].front().exp, lh) != p.lcm;
    });
    for (auto& p : D)
      if (!coprime(p)) pairs.push_back(std::move(p));
    std::erase_if(active, [&](std::size_t g) { return lh.divides(polys[g].front().exp); });
    active.push_back(h);
  };

  for (const auto& g : I.gens()) {
    Terms t = red.reduce(sorted_terms(g, order), stop);
    if (t.empty()) continue;
    make_monic(t);
    polys.push_back(std::move(t));
    update();
  }

  while (!pairs.empty()) {
    if (stop.stop_requested()) throw Cancelled();
    // normal strategy: smallest lcm degree, then smallest lcm in the order
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.lcm != b.lcm) return order.greater(b.lcm, a.lcm);
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    const Pair p = *best;
    pairs.erase(best);
    Terms s = red.reduce(spoly(polys[p.i], polys[p.j], p.lcm, order), stop);
    if (s.empty()) continue;
    make_monic(s);
    polys.push_back(std::move(s));
    update();
  }

  // active elements already have pairwise non-dividing leads; interreduce the tails
  std::sort(active.begin(), active.end(),
            [&](std::size_t a, std::size_t b) { return order.greater(polys[a].front().exp, polys[b].front().exp); });
  std::vector<Polynomial> elements;
  std::vector<Exponent> leads;
  for (std::size_t k = 0; k < active.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t m = 0; m < active.size(); ++m)
      if (m != k) others.push_back(active[m]);
    const Reducer tail{polys, others, order};
    Terms t = polys[active[k]];
    Term lead = t.front();
    t.erase(t.begin());
    Terms r = tail.reduce(std::move(t), stop);
    r.insert(r.begin(), std::move(lead));
    leads.push_back(r.front().exp);
    elements.push_back(to_poly(I.vars(), std::move(r)));
  }
  return GroebnerBasis(I.vars(), std::move(elements), std::move(leads), order, true);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  if (p.is_zero()) return p;
  if (!same_vars(p.vars(), G.vars())) throw DimensionMismatch("polynomial and basis live in different rings");
  std::vector<Terms> polys;
  for (const auto& g : G.elements()) polys.push_back(sorted_terms(g, G.order()));
  std::vector<std::size_t> all(polys.size());
  std::iota(all.begin(), all.end(), 0);
  const Reducer red{polys, all, G.order()};
  return to_poly(p.vars(), red.reduce(sorted_terms(p, G.order()), {}));
}

// ---------------------------------------------------------------------------------------
// Ideal-level operations

Ideal canonical(const Ideal& I, std::stop_token stop) {
  auto G = buchberger(I, TermOrder::degrevlex(I.nvars()), std::move(stop));
  return Ideal(I.vars(), G.elements(), I.has_grading() ? std::optional<Grading>(I.grading()) : std::nullopt);
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!same_vars(a.vars(), b.vars())) return false;
  const auto o = TermOrder::degrevlex(a.nvars());
  return buchberger(a, o).elements() == buchberger(b, o).elements();
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
  if (!same_vars(a.vars(), b.vars())) throw DimensionMismatch("ideals live in different rings");
  const auto G = buchberger(b, TermOrder::degrevlex(b.nvars()));
  return std::all_of(a.gens().begin(), a.gens().end(), [&](const Polynomial& g) { return normal_form(g, G).is_zero(); });
}

bool contains(const Ideal& I, const Polynomial& p) {
  return normal_form(p, buchberger(I, TermOrder::degrevlex(I.nvars()))).is_zero();
}

bool is_unit_ideal(const Ideal& I) { return buchberger(I, TermOrder::degrevlex(I.nvars())).is_unit(); }

bool is_binomial(const Ideal& I) {
  const auto C = canonical(I);
  return std::all_of(C.gens().begin(), C.gens().end(), [](const Polynomial& g) { return g.size() <= 2; });
}

Ideal initial_ideal(const Ideal& I, const TermOrder& order, std::stop_token stop) {
  const auto G = buchberger(I, order, stop);
  std::vector<Polynomial> mons;
  for (const auto& e : G.leads()) mons.push_back(Polynomial::monomial(I.vars(), e));
  return canonical(Ideal(I.vars(), std::move(mons)), stop);
}

Ideal initial_ideal(const Ideal& I, const WeightVector& w, Convention convention, std::stop_token stop) {
  return initial_ideal(I, WeightRows{w}, convention, std::move(stop));
}

Ideal initial_ideal(const Ideal& I, const WeightRows& M, Convention convention, std::stop_token stop) {
  const auto order = TermOrder::matrix(M, convention, TermOrder::lex_reversed(I.nvars()));
  const auto G = buchberger(I, order, stop);
  std::vector<Polynomial> forms;
  for (const auto& g : G.elements()) forms.push_back(initial_form(g, M, convention));
  return canonical(Ideal(I.vars(), std::move(forms), I.has_grading() ? std::optional<Grading>(I.grading()) : std::nullopt),
                   stop);
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& keep, std::stop_token stop) {
  const auto& vars = *I.vars();
  std::vector<bool> drop(vars.size(), true);
  for (const auto& k : keep) drop[var_index(vars, k)] = false;
  VarList kept;
  std::vector<std::int32_t> weights;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!drop[i]) {
      kept.push_back(vars[i]);
      weights.push_back(I.grading().weights()[i]);
    }
  const auto G = buchberger(I, TermOrder::elimination(drop), stop);
  auto target = make_vars(kept);
  std::vector<Polynomial> out;
  for (const auto& g : G.elements()) {
    const auto sup = g.support();
    if (std::any_of(sup.begin(), sup.end(), [&](std::size_t i) { return drop[i]; })) continue;
    out.push_back(g.rebase(target));
  }
  std::optional<Grading> grading;
  if (I.has_grading()) grading = Grading(weights);
  return canonical(Ideal(target, std::move(out), grading), stop);
}

Ideal saturate(const Ideal& I, const Polynomial& f, std::stop_token stop) {
  if (f.is_zero()) throw ZeroPolynomial();
  VarList ext = *I.vars();
  std::string y = "_sat";
  while (std::find(ext.begin(), ext.end(), y) != ext.end()) y += "_";
  ext.push_back(y);
  auto vars = make_vars(ext);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.rebase(vars));
  const auto yv = Polynomial::variable(vars, ext.size() - 1);
  gens.push_back(Polynomial::constant(vars, 1) - yv * f.rebase(vars));
  const auto E = eliminate(Ideal(vars, std::move(gens), std::nullopt), *I.vars(), stop);
  std::vector<Polynomial> back;
  for (const auto& g : E.gens()) back.push_back(g.rebase(I.vars()));
  Ideal out(I.vars(), std::move(back));
  if (I.has_grading() && out.is_homogeneous() && f.is_homogeneous(I.grading()))
    return Ideal(I.vars(), out.gens(), I.grading());
  return out;
}

Ideal saturate_variable(const Ideal& I, std::size_t var, std::stop_token stop) {
  const std::size_t n = I.nvars();
  if (var >= n) throw DimensionMismatch("variable index out of range");
  if (!I.grading().is_standard() || !I.is_homogeneous())
    return saturate(I, Polynomial::variable(I.vars(), var), std::move(stop));
  WeightRows rows{WeightVector(n, 1)};
  WeightVector last(n, 0);
  last[var] = -1;
  rows.push_back(last);
  for (std::size_t i = n; i-- > 0;) {
    if (i == var) continue;
    WeightVector r(n, 0);
    r[i] = -1;
    rows.push_back(std::move(r));
  }
  const auto G = buchberger(I, TermOrder::matrix(rows, Convention::Max, TermOrder::lex_reversed(n)), stop);
  std::vector<Polynomial> out;
  for (const auto& g : G.elements()) {
    Exponent::value_type k = std::numeric_limits<Exponent::value_type>::max();
    for (const auto& t : g.terms()) k = std::min(k, t.exp[var]);
    std::vector<Term> terms(g.terms().begin(), g.terms().end());
    for (auto& t : terms) t.exp[var] -= k;
    out.emplace_back(I.vars(), std::move(terms));
  }
  return canonical(Ideal(I.vars(), std::move(out), I.has_grading() ? std::optional<Grading>(I.grading()) : std::nullopt),
                   stop);
}

Ideal product(const Ideal& a, const Ideal& b) {
  if (!same_vars(a.vars(), b.vars())) throw DimensionMismatch("ideals live in different rings");
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.vars(), std::move(gens));
}

bool in_radical(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return true;
  VarList ext = *I.vars();
  std::string y = "_rad";
  while (std::find(ext.begin(), ext.end(), y) != ext.end()) y += "_";
  ext.push_back(y);
  auto vars = make_vars(ext);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.rebase(vars));
  gens.push_back(Polynomial::constant(vars, 1) - Polynomial::variable(vars, ext.size() - 1) * f.rebase(vars));
  return is_unit_ideal(Ideal(vars, std::move(gens)));
}

bool same_radical(const Ideal& a, const Ideal& b) {
  auto inside = [](const Ideal& x, const Ideal& y) {
    return std::all_of(x.gens().begin(), x.gens().end(), [&](const Polynomial& g) { return in_radical(y, g); });
  };
  return inside(a, b) && inside(b, a);
}

Ideal sum(const Ideal& a, const Ideal& b) {
  if (!same_vars(a.vars(), b.vars())) throw DimensionMismatch("ideals live in different rings");
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.vars(), std::move(gens));
}

Ideal ring_map_kernel(const VarList& source, const std::vector<Polynomial>& images, const Ideal& target,
                      std::stop_token stop) {
  if (images.size() != source.size()) throw DimensionMismatch("one image per source variable is required");
  // source names may clash with target names, so the graph ring uses private names
  VarList graph = *target.vars();
  std::vector<std::string> tmp;
  for (std::size_t i = 0; i < source.size(); ++i) {
    std::string name = "_src" + std::to_string(i);
    while (std::find(graph.begin(), graph.end(), name) != graph.end()) name += "_";
    graph.push_back(name);
    tmp.push_back(name);
  }
  auto gvars = make_vars(graph);
  std::vector<Polynomial> gens;
  for (const auto& g : target.gens()) gens.push_back(g.rebase(gvars));
  const std::size_t base = target.nvars();
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (!same_vars(images[i].vars(), target.vars())) throw DimensionMismatch("image lives outside the target ring");
    gens.push_back(Polynomial::variable(gvars, base + i) - images[i].rebase(gvars));
  }
  const auto E = eliminate(Ideal(gvars, std::move(gens)), tmp, stop);
  auto svars = make_vars(source);
  std::vector<int> map(source.size());
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial> out;
  for (const auto& g : E.gens()) out.push_back(g.rebase(svars, map));
  // grade the source by the image degrees when the images are homogeneous
  std::vector<std::int32_t> degs;
  for (const auto& im : images) {
    if (im.is_zero() || !im.is_homogeneous(target.grading())) break;
    const auto d = target.grading().degree(im.terms().front().exp);
    if (d <= 0) break;
    degs.push_back(static_cast<std::int32_t>(d));
  }
  std::optional<Grading> grading;
  if (degs.size() == source.size()) grading = Grading(degs);
  return canonical(Ideal(svars, std::move(out), grading), stop);
}

Ideal substitute_zero(const Ideal& I, const std::vector<std::string>& drop) {
  const auto& vars = *I.vars();
  std::vector<bool> gone(vars.size(), false);
  for (const auto& d : drop) gone[var_index(vars, d)] = true;
  VarList kept;
  std::vector<std::int32_t> weights;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!gone[i]) {
      kept.push_back(vars[i]);
      weights.push_back(I.grading().weights()[i]);
    }
  auto target = make_vars(kept);
  std::vector<Polynomial> out;
  for (auto g : I.gens()) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (gone[i]) g = g.substitute(i, 0);
    out.push_back(g.rebase(target));
  }
  std::optional<Grading> grading;
  if (I.has_grading()) grading = Grading(weights);
  return Ideal(target, std::move(out), grading);
}

Ideal extend(const Ideal& I, const Vars& target) {
  std::vector<Polynomial> out;
  for (const auto& g : I.gens()) out.push_back(g.rebase(target));
  return Ideal(target, std::move(out));
}

std::vector<Exponent> monomials_of_degree(const Grading& grading, std::int64_t degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  const auto& w = grading.weights();
  Exponent e(w.size());
  // depth-first over variables, last variable absorbs the remainder
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == w.size() || w.empty()) {
      if (w.empty()) {
        if (left == 0) out.push_back(e);
        return;
      }
      if (left % w[i] == 0) {
        e[i] = static_cast<Exponent::value_type>(left / w[i]);
        out.push_back(e);
        e[i] = 0;
      }
      return;
    }
    for (std::int64_t k = left / w[i]; k >= 0; --k) {
      e[i] = static_cast<Exponent::value_type>(k);
      self(self, i + 1, left - k * w[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Exponent> standard_monomials(const GroebnerBasis& G, const Grading& grading, std::int64_t degree) {
  auto all = monomials_of_degree(grading, degree);
  std::erase_if(all, [&](const Exponent& e) {
    return std::any_of(G.leads().begin(), G.leads().end(), [&](const Exponent& l) { return l.divides(e); });
  });
  std::sort(all.begin(), all.end(), [&](const Exponent& a, const Exponent& b) { return G.order().greater(a, b); });
  return all;
}

std::int64_t graded_dimension(const Ideal& I, std::int64_t degree) {
  if (!I.is_homogeneous()) throw NotHomogeneous("graded dimension needs a homogeneous ideal");
  const auto G = buchberger(I, TermOrder::degrevlex(I.nvars()));
  return static_cast<std::int64_t>(standard_monomials(G, I.grading(), degree).size());
}

std::string format_ideal(const Ideal& I) {
  if (I.gens().empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    if (i) out += ", ";
    out += format_polynomial(I.gens()[i]);
  }
  return out + ")";
}

}  // namespace toricdeg
