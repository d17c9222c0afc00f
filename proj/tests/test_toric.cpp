#include <random>

#include "doctest.h"
#include "support.hpp"
#include "toricdeg/errors.hpp"
#include "toricdeg/toric.hpp"

using namespace testing;

namespace {

IntMatrix M(const std::vector<std::vector<std::int64_t>>& rows) { return IntMatrix::from_rows(rows); }

RationalVector Q(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

void check_vanishing(const Ideal& I, const IntMatrix& A, int samples, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
  for (int k = 0; k < samples; ++k) {
    RationalVector t;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      Rational q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
      q.canonicalize();
      t.push_back(q);
    }
    auto p = torus_point(A, t);
    for (const auto& g : I.gens()) CHECK(g.evaluate(p) == 0);
  }
}

}  // namespace

TEST_CASE("toric ideal of the twisted cubic") {
  auto A = M({{1, 1, 1, 1}, {3, 2, 1, 0}});
  auto I = toric_ideal(A, {"u3", "u2", "u1", "u0"});
  auto expected = ideal_of(I.vars(), {"u2^2 - u3*u1", "u1^2 - u2*u0", "u2*u1 - u3*u0"});
  CHECK(same_ideal(I, expected));
  std::mt19937_64 rng(9);
  check_vanishing(I, A, 50, rng);
  // every kernel binomial reduces to zero
  auto G = buchberger(I, TermOrder::degrevlex(4));
  for (const auto& u : kernel_lattice(A)) {
    Exponent plus(4), minus(4);
    for (std::size_t j = 0; j < 4; ++j) (u[j] > 0 ? plus : minus)[j] = static_cast<int>(Integer(abs(u[j])).get_si());
    CHECK(normal_form(Polynomial::monomial(I.vars(), plus) - Polynomial::monomial(I.vars(), minus), G).is_zero());
  }
  // homogeneous for each row of A
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (const auto& g : I.gens()) {
      std::vector<std::int64_t> w;
      for (std::size_t j = 0; j < 4; ++j) w.push_back(A(r, j).get_si());
      CHECK(initial_form(g, w, Convention::Min) == g);
    }
}

TEST_CASE("toric ideal edge cases") {
  CHECK(toric_ideal(IntMatrix::identity(3), {"a", "b", "c"}).is_zero());
  auto E = toric_ideal(M({{3, 2, 0}, {0, 1, 3}}), {"A", "B", "C"});
  CHECK(same_ideal(E, ideal_of(E.vars(), {"B^3 - A^2*C"})));
  // a non-saturated starting lattice still gives the prime ideal
  auto S = toric_ideal(M({{1, 1, 1, 1}, {0, 1, 2, 3}}), {"a", "b", "c", "d"});
  CHECK(S.gens().size() == 3);
}

TEST_CASE("torus points") {
  auto one = torus_point(M({{0, 1, 3}}), Q({1}));
  CHECK(one == Q({1, 1, 1}));
  CHECK(torus_point(M({{0, 1, 3}}), Q({2})) == Q({1, 2, 8}));
  auto tc = torus_point(M({{3, 2, 1, 0}, {0, 1, 2, 3}}), Q({2, 3}));
  // [s^3 : s^2 u : s u^2 : u^3] normalized
  CHECK(tc == RationalVector{Rational(1), Rational(3, 2), Rational(9, 4), Rational(27, 8)});
  CHECK_THROWS_AS(torus_point(M({{1, 2}}), Q({0})), ZeroParameter);
}

TEST_CASE("convex hulls") {
  Semigroup ell({{1, 0}, {1, 1}, {1, 3}}, 0, {"y", "x", "z"});
  auto P = delta_polytope(ell);
  CHECK(P.vertices == std::vector<RationalVector>{Q({0}), Q({3})});
  REQUIRE(P.has_halfspaces);
  CHECK(P.halfspaces.size() == 2);

  Semigroup single({{2, 4, 6}});
  CHECK(delta_polytope(single).vertices == std::vector<RationalVector>{Q({2, 3})});

  // square with an interior point and an edge midpoint
  auto sq = convex_hull({Q({0, 0}), Q({2, 0}), Q({0, 2}), Q({2, 2}), Q({1, 1}), Q({1, 0})});
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.halfspaces.size() == 4);
  // tetrahedron plus centroid
  auto tet = convex_hull({Q({0, 0, 0}), Q({1, 0, 0}), Q({0, 1, 0}), Q({0, 0, 1}), Q({0, 0, 0})});
  CHECK(tet.vertices.size() == 4);
  CHECK(tet.halfspaces.size() == 4);
  CHECK(in_convex_hull(RationalVector{Rational(1, 4), Rational(1, 4), Rational(1, 4)}, tet.vertices));
  CHECK(!in_convex_hull(RationalVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)}, tet.vertices));
}

TEST_CASE("veronese") {
  Semigroup ell({{1, 0}, {1, 1}, {1, 3}});
  auto v1 = veronese(ell, 1);
  CHECK(v1.gens() == ell.gens());
  auto v3 = veronese(ell, 3);
  CHECK(v3.size() == 9);
  auto contains = [&](const IntVector& g) { return std::find(v3.gens().begin(), v3.gens().end(), g) != v3.gens().end(); };
  CHECK(contains({3, 0}));
  CHECK(contains({3, 9}));
  CHECK(contains({3, 2}));
  for (unsigned n : {1u, 2u, 3u}) CHECK(delta_polytope(veronese(ell, n)).vertices == delta_polytope(ell).vertices);
}

TEST_CASE("semigroup embedding") {
  Semigroup ell({{1, 0}, {1, 1}, {1, 3}}, 0, {"y", "x", "z"});
  auto emb = embed_semigroup(ell);
  CHECK(emb.N == 3);
  CHECK(emb.image.gens() == std::vector<IntVector>{{3, 0}, {2, 1}, {0, 3}});
  CHECK(!emb.image.degree_coord());

  auto trivial = embed_semigroup(Semigroup({{1, 0}}));
  CHECK(trivial.N == 1);
  CHECK(trivial.image.gens() == std::vector<IntVector>{{1, 0}});

  CHECK_THROWS_AS(embed_semigroup(Semigroup({{1, 0}, {2, 1}})), NotDegreeOneGenerated);

  // translated g-vector values of Gr(2,4): additive and total-degree graded
  Semigroup g24({{1, 2, 1, 1, 1, 1}, {1, 1, 2, 1, 1, 1}, {1, 1, 1, 2, 1, 1},
                 {1, 1, 1, 1, 2, 1}, {1, 1, 0, 2, 2, 1}, {1, 1, 1, 1, 1, 2}});
  auto e = embed_semigroup(g24);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, g24.size() - 1);
  const auto iota = iota_matrix(e.N, 5);
  for (int k = 0; k < 10; ++k) {
    auto i = pick(rng), j = pick(rng);
    IntVector s(6);
    for (std::size_t c = 0; c < 6; ++c) s[c] = g24.gens()[i][c] + g24.gens()[j][c];
    IntVector sum_img(6);
    for (std::size_t c = 0; c < 6; ++c) sum_img[c] = e.image.gens()[i][c] + e.image.gens()[j][c];
    CHECK(iota * s == sum_img);
    Integer tot = 0;
    for (const auto& x : sum_img) tot += x;
    CHECK(tot == 2 * e.N);
  }
}
