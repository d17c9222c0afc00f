#include <random>

#include "doctest.h"
#include "support.hpp"
#include "toricdeg/errors.hpp"
#include "toricdeg/intlat.hpp"

using namespace testing;

namespace {

IntMatrix M(const std::vector<std::vector<std::int64_t>>& rows) { return IntMatrix::from_rows(rows); }

bool is_echelon(const HermiteForm& hf) {
  for (std::size_t i = 0; i < hf.pivots.size(); ++i) {
    const auto c = hf.pivots[i];
    if (hf.H(i, c) <= 0) return false;
    for (std::size_t j = 0; j < c; ++j)
      if (hf.H(i, j) != 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (hf.H(k, c) < 0 || hf.H(k, c) >= hf.H(i, c)) return false;
    if (i > 0 && c <= hf.pivots[i - 1]) return false;
  }
  for (std::size_t i = hf.pivots.size(); i < hf.H.rows(); ++i)
    for (std::size_t j = 0; j < hf.H.cols(); ++j)
      if (hf.H(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("hermite normal form") {
  auto I3 = IntMatrix::identity(3);
  auto hf = hermite_normal_form(I3);
  CHECK(hf.H == I3);
  CHECK(hf.U == I3);

  auto row = hermite_normal_form(M({{6, 4}}).transpose());
  CHECK(row.H(0, 0) == 2);

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int k = 0; k < 50; ++k) {
    IntMatrix A(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) A(i, j) = d(rng);
    auto h = hermite_normal_form(A);
    CHECK(h.H == h.U * A);
    CHECK(abs(determinant(h.U)) == 1);
    CHECK(is_echelon(h));
    // row permutations do not change H
    IntMatrix P = A;
    for (std::size_t j = 0; j < 3; ++j) std::swap(P(0, j), P(2, j));
    CHECK(hermite_normal_form(P).H == h.H);
  }
}

TEST_CASE("kernel lattice") {
  auto K = kernel_lattice(M({{1, 1, 1}, {0, 1, 3}}));
  REQUIRE(K.size() == 1);
  CHECK(((K[0] == IntVector{2, -3, 1}) || (K[0] == IntVector{-2, 3, -1})));
  CHECK(kernel_lattice(IntMatrix::identity(3)).empty());

  auto A = M({{1, 1, 1, 1}, {3, 2, 1, 0}});
  auto T = kernel_lattice(A);
  CHECK(T.size() == 2);
  for (const auto& u : T) CHECK(A * u == IntVector{0, 0});
  // the two quadric relations lie in the kernel lattice
  CHECK(lattice_index({T[0], T[1], IntVector{1, -2, 1, 0}, IntVector{0, 1, -2, 1}}, 4) == 0);
  IntMatrix stacked = IntMatrix::from_rows(std::vector<IntVector>{T[0], T[1]});
  auto hs = hermite_normal_form(stacked);
  CHECK(hermite_normal_form(IntMatrix::from_rows(std::vector<IntVector>{T[0], T[1], {1, -2, 1, 0}, {0, 1, -2, 1}})).H.row(0) ==
        hs.H.row(0));

  // saturation: 2x + 4y = 0 has kernel generated by (2, -1), not (4, -2)
  auto S = kernel_lattice(M({{2, 4}}));
  REQUIRE(S.size() == 1);
  CHECK(S[0] == IntVector{2, -1});
}

TEST_CASE("homogenize") {
  auto H = homogenize_matrix(M({{0, 1, 3}}));
  CHECK(H == M({{3, 2, 0}, {0, 1, 3}}));
  auto E = homogenize_matrix(M({{1, 2}, {1, 0}}));
  CHECK(E == M({{0, 0}, {1, 2}, {1, 0}}));
  auto plabic = homogenize_matrix(M({{1, 1, 1, 1, 1, 1},
                                     {0, 0, 0, 0, 0, 1},
                                     {0, 0, 0, 1, 1, 1},
                                     {0, 1, 1, 1, 1, 2},
                                     {0, 0, 1, 0, 1, 1}}));
  for (std::size_t j = 0; j < plabic.cols(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < plabic.rows(); ++i) s += plabic(i, j);
    CHECK(s == 6);
  }
  CHECK(plabic.row(0) == IntVector{5, 4, 3, 3, 2, 0});
  CHECK(rank(plabic) == 5);
}

TEST_CASE("iota") {
  auto imgs = iota_images(3, {{1, 0}, {1, 1}, {1, 3}});
  CHECK(imgs == std::vector<IntVector>{{3, 0}, {2, 1}, {0, 3}});
  CHECK(iota_images(1, {{1, 0}}) == std::vector<IntVector>{{1, 0}});
  CHECK_THROWS_AS(iota_images(2, {{1, 3}}), NTooSmall);
  for (int N = 1; N < 6; ++N) CHECK(determinant(iota_matrix(N, 3)) == N);
  // the degree-one part of ℤ^2 maps onto a sublattice of index N in the image lattice
  auto gens = std::vector<IntVector>{{1, 0}, {1, 1}, {1, 3}};
  CHECK(lattice_index(gens, 2) == 1);
  CHECK(lattice_index(iota_images(3, gens), 2) == 3);
}

TEST_CASE("weight from matrix") {
  auto v = vars_of({"x", "y", "z"});
  auto J = ideal_of(v, {"y^2*z - x^3 + x*z^2"});
  auto single = weight_from_matrix(J, M({{1, 0, 3}}), Convention::Min);
  CHECK(single.w == WeightVector{1, 0, 3});

  auto pl = vars_of({"p12", "p13", "p14", "p23", "p24", "p34"});
  auto Ip = ideal_of(pl, {"p12*p34 - p13*p24 + p14*p23"});
  auto G = M({{1, 1, 1, 1, 1, 1},
              {2, 1, 1, 1, 1, 1},
              {1, 2, 1, 1, 0, 1},
              {1, 1, 2, 1, 2, 1},
              {1, 1, 1, 2, 2, 1},
              {1, 1, 1, 1, 1, 2}});
  auto cert = weight_from_matrix(Ip, G, Convention::Min);
  CHECK(same_ideal(initial_ideal(Ip, cert.w, Convention::Min), ideal_of(pl, {"p13*p24 - p14*p23"})));

  // a matrix whose refinement needs more than the allowed base
  CHECK_THROWS_AS(weight_from_matrix(Ip, M({{1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 1}}), Convention::Min, 1),
                  NoCertificate);
}
