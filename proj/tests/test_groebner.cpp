#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "toricdeg/errors.hpp"

using namespace testing;

namespace {

Vars plucker_vars() { return vars_of({"p12", "p13", "p14", "p23", "p24", "p34"}); }

Ideal twisted_cubic() {
  auto v = vars_of({"u3", "u2", "u1", "u0"});
  return ideal_of(v, {"u2^2 - u3*u1", "u1^2 - u2*u0", "u2*u1 - u3*u0"});
}

}  // namespace

TEST_CASE("buchberger small cases") {
  auto v = vars_of({"x", "y"});
  auto G = buchberger(ideal_of(v, {"x"}), TermOrder::degrevlex(2));
  REQUIRE(G.size() == 1);
  CHECK(G.elements()[0] == P(v, "x"));

  auto L = buchberger(ideal_of(v, {"x*y - 1", "y^2 - 1"}), TermOrder::lex({0, 1}));
  REQUIRE(L.size() == 2);
  CHECK(L.elements()[0] == P(v, "x - y"));
  CHECK(L.elements()[1] == P(v, "y^2 - 1"));

  auto pl = plucker_vars();
  auto Gp = buchberger(ideal_of(pl, {"2*p12*p34 - 2*p13*p24 + 2*p14*p23"}), TermOrder::degrevlex(6));
  REQUIRE(Gp.size() == 1);
  CHECK(Gp.elements()[0] == P(pl, "p12*p34 - p13*p24 + p14*p23"));

  auto E = buchberger(Ideal::zero(v), TermOrder::degrevlex(2));
  CHECK(E.size() == 0);
}

TEST_CASE("normal form") {
  auto pl = plucker_vars();
  auto I = ideal_of(pl, {"p12*p34 - p13*p24 + p14*p23"});
  // leading term p13*p24 under a weight that penalises p12 and p34
  auto order = TermOrder::weight({1, 0, 0, 0, 0, 1}, Convention::Min, TermOrder::lex_reversed(6));
  auto G = buchberger(I, order);
  CHECK(G.leads()[0] == Exponent{0, 1, 0, 0, 1, 0});
  auto r = normal_form(P(pl, "p13*p24"), G);
  CHECK(r == P(pl, "p12*p34 + p14*p23"));
  CHECK(normal_form(Polynomial(pl), G).is_zero());
  CHECK(normal_form(I.gens()[0], G).is_zero());
}

TEST_CASE("reduced basis is unique under shuffles") {
  std::mt19937_64 rng(3);
  auto I = twisted_cubic();
  auto gens = I.gens();
  gens.push_back(gens[0] * P(I.vars(), "u3 + u0") + gens[2]);
  for (const auto& order : {TermOrder::degrevlex(4), TermOrder::lex({0, 1, 2, 3}), TermOrder::lex_reversed(4)}) {
    const auto ref = buchberger(Ideal(I.vars(), gens), order).elements();
    for (int k = 0; k < 20; ++k) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(buchberger(Ideal(I.vars(), gens), order).elements() == ref);
    }
  }
}

TEST_CASE("initial ideals") {
  auto v = vars_of({"x", "y", "z"});
  auto J = ideal_of(v, {"y^2*z - x^3 + x*z^2"});
  CHECK(same_ideal(initial_ideal(J, {1, 0, 3}, Convention::Min), ideal_of(v, {"y^2*z - x^3"})));
  CHECK(same_ideal(initial_ideal(J, {0, 0, 0}, Convention::Min), J));

  auto pl = plucker_vars();
  auto I = ideal_of(pl, {"p12*p34 - p13*p24 + p14*p23"});
  // negated translated g-vector weights collapse onto the binomial
  WeightRows M = {{1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1}, {1, 2, 1, 1, 0, 1}, {1, 1, 2, 1, 2, 1},
                  {1, 1, 1, 2, 2, 1}, {1, 1, 1, 1, 1, 2}};
  CHECK(same_ideal(initial_ideal(I, M, Convention::Min), ideal_of(pl, {"p13*p24 - p14*p23"})));

  auto mono = initial_ideal(twisted_cubic(), TermOrder::lex({0, 1, 2, 3}));
  CHECK(std::all_of(mono.gens().begin(), mono.gens().end(), [](const Polynomial& g) { return g.size() == 1; }));

  auto inhom = ideal_of(v, {"x - 1"});
  CHECK_THROWS_AS(initial_ideal(inhom, {1, 0, 0}, Convention::Min), NotHomogeneous);
}

TEST_CASE("elimination") {
  auto v = vars_of({"x", "y", "z"});
  auto hyp = ideal_of(v, {"x*y - z^2"});
  CHECK(eliminate(hyp, {"x", "z"}).is_zero());
  auto xy = vars_of({"x", "y"});
  CHECK(same_ideal(eliminate(ideal_of(xy, {"x - y"}), {"x", "y"}), ideal_of(xy, {"x - y"})));

  auto tc = twisted_cubic();
  auto E = eliminate(tc, {"u3", "u2", "u0"});
  auto kept = vars_of({"u3", "u2", "u0"});
  CHECK(same_ideal(E, ideal_of(kept, {"u2^3 - u3^2*u0"})));
  CHECK(same_ideal(eliminate(E, {"u3", "u2", "u0"}), E));
}

TEST_CASE("saturation") {
  auto v = vars_of({"x", "y", "z"});
  auto sat = saturate(ideal_of(v, {"x*y"}), P(v, "y"));
  CHECK(same_ideal(sat, ideal_of(v, {"x"})));
  CHECK(same_ideal(saturate(sat, P(v, "y")), sat));

  auto u = vars_of({"u3", "u2", "u1", "u0"});
  auto lim = ideal_of(u, {"u3*u1", "u1^2", "u2*u1", "u2^3 - u3^2*u0"});
  CHECK(is_unit_ideal(saturate(lim, P(u, "u1"))));
  CHECK(is_unit_ideal(saturate(ideal_of(v, {"x^2", "x"}), P(v, "x"))));
  CHECK_THROWS_AS(saturate(lim, Polynomial(u)), ZeroPolynomial);
}

TEST_CASE("ring map kernels") {
  auto pl = plucker_vars();
  auto I = ideal_of(pl, {"p12*p34 - p13*p24 + p14*p23"});
  // x_ij -> p^(g(p_ij) + 1)
  const char* images[] = {"p12^2*p13*p14*p23*p34", "p12*p13^2*p14*p23*p34", "p12*p13*p14^2*p23*p34",
                          "p12*p13*p14*p23^2*p34", "p12*p14^2*p23^2*p34", "p12*p13*p14*p23*p34^2"};
  std::vector<Polynomial> im;
  for (auto s : images) im.push_back(P(pl, s));
  VarList src = {"x12", "x13", "x14", "x23", "x24", "x34"};
  auto K = ring_map_kernel(src, im, I);
  auto sv = make_vars(src);
  CHECK(same_ideal(K, ideal_of(sv, {"x13*x24 - x14*x23"})));
  // the map into the polynomial ring has the same kernel
  CHECK(same_ideal(ring_map_kernel(src, im, Ideal::zero(pl)), K));

  auto v = vars_of({"x", "y"});
  std::vector<Polynomial> id = {P(v, "x"), P(v, "y")};
  CHECK(ring_map_kernel({"x", "y"}, id, Ideal::zero(v)).is_zero());

  auto c = vars_of({"x", "y", "z"});
  auto E = ideal_of(c, {"y^2*z - x^3 + x*z^2"});
  std::vector<Polynomial> ell = {P(c, "y^3"), P(c, "y^2*z"), P(c, "z^3")};
  auto Ke = ring_map_kernel({"A", "B", "C"}, ell, E);
  auto abc = vars_of({"A", "B", "C"});
  CHECK(same_ideal(Ke, ideal_of(abc, {"B^3 - A^2*C"})));
}

TEST_CASE("standard monomials and graded dimension") {
  auto pl = plucker_vars();
  auto I = ideal_of(pl, {"p12*p34 - p13*p24 + p14*p23"});
  auto order = TermOrder::weight({1, 0, 0, 0, 0, 1}, Convention::Min, TermOrder::lex_reversed(6));
  auto G = buchberger(I, order);
  CHECK(standard_monomials(G, Grading::standard(6), 1).size() == 6);
  CHECK(standard_monomials(G, Grading::standard(6), 0).size() == 1);
  auto deg2 = standard_monomials(G, Grading::standard(6), 2);
  CHECK(deg2.size() == 20);
  CHECK(std::find(deg2.begin(), deg2.end(), Exponent{0, 1, 0, 0, 1, 0}) == deg2.end());
  CHECK(graded_dimension(I, 1) == 6);
  CHECK(graded_dimension(I, 2) == 20);
  CHECK(graded_dimension(Ideal::zero(vars_of({"a", "b", "c"})), 2) == 6);
  auto v = vars_of({"x", "y"});
  CHECK_THROWS_AS(graded_dimension(ideal_of(v, {"x - 1"}), 1), NotHomogeneous);
}

TEST_CASE("membership soundness on random ideals") {
  std::mt19937_64 rng(5);
  auto v = vars_of({"a", "b", "c"});
  for (int k = 0; k < 15; ++k) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(random_poly(rng, v, 3, 3));
    Ideal I(v, gens);
    auto G = buchberger(I, TermOrder::degrevlex(3));
    for (const auto& g : I.gens()) CHECK(normal_form(g, G).is_zero());
  }
}

TEST_CASE("cancellation") {
  std::stop_source src;
  src.request_stop();
  CHECK_THROWS_AS(buchberger(twisted_cubic(), TermOrder::degrevlex(4), src.get_token()), Cancelled);
}
