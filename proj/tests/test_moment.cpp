#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "toricdeg/errors.hpp"
#include "toricdeg/moment.hpp"

using namespace testing;

namespace {

IntMatrix row(std::vector<std::int64_t> r) { return IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{std::move(r)}); }

ComplexPoint pt(std::vector<Complex> c) { return ComplexPoint{std::move(c)}; }

}  // namespace

TEST_CASE("moment formula") {
  const auto a = row({1, 0, 3});
  CHECK(moment(a, pt({0, 0, 1}))[0] == doctest::Approx(3.0));
  CHECK(moment(a, pt({1, 0, 0}))[0] == doctest::Approx(1.0));
  CHECK(moment(a, pt({1, 1, 1}))[0] == doctest::Approx(4.0 / 3));
  CHECK_THROWS_AS(moment(a, pt({0, 0, 0})), ZeroVector);
  CHECK_THROWS_AS(moment(a, pt({1, 1})), DimensionMismatch);
}

TEST_CASE("moment invariances") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const auto A = IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{{0, 1, 2, 1}, {0, 0, 1, 2}});
  for (int k = 0; k < 50; ++k) {
    ComplexPoint z;
    for (int j = 0; j < 4; ++j) z.coords.emplace_back(g(rng), g(rng));
    const auto mu = moment(A, z);
    CHECK(mu[0] >= -1e-9);
    CHECK(mu[0] <= 2 + 1e-9);
    const Complex lambda(g(rng), g(rng));
    ComplexPoint zl = z;
    for (auto& c : zl.coords) c *= lambda;
    const auto ml = moment(A, zl);
    for (std::size_t i = 0; i < mu.size(); ++i) CHECK(std::abs(ml[i] - mu[i]) < 1e-12);

    std::vector<Complex> t{{g(rng), g(rng)}, {g(rng), g(rng)}};
    auto rotated = t;
    rotated[0] *= std::polar(1.0, g(rng));
    const auto m1 = moment(A, torus_point_float(A, t));
    const auto m2 = moment(A, torus_point_float(A, rotated));
    for (std::size_t i = 0; i < m1.size(); ++i) CHECK(std::abs(m1[i] - m2[i]) < 1e-12);
  }
  CHECK_THROWS_AS(torus_point_float(A, {1.0, 0.0}), ZeroParameter);
}

TEST_CASE("elliptic moment image fills [0,3]") {
  const auto a = row({1, 0, 3});
  const auto S = sample_moment_image(a, 2000, 42);
  REQUIRE(S.size() == 2000);
  double lo = 10, hi = -10;
  for (const auto& s : S) lo = std::min(lo, s.value[0]), hi = std::max(hi, s.value[0]);
  CHECK(lo <= 0.05);
  CHECK(hi >= 2.95);

  const Semigroup sg(std::vector<IntVector>{{1, 1}, {1, 0}, {1, 3}});
  const auto P = delta_polytope(sg);
  const auto cmp = image_vs_polytope(S, P, 1e-9);
  CHECK(cmp.inside_fraction == 1.0);
  CHECK(cmp.coverage_gap < 0.2);

  // seed determinism
  const auto again = sample_moment_image(a, 2000, 42);
  for (std::size_t i = 0; i < S.size(); ++i) CHECK(again[i].value == S[i].value);
  CHECK(sample_moment_image(a, 5, 43)[0].value != S[0].value);
}

TEST_CASE("containment checks") {
  PolytopeQ point{{{Rational(2)}}, 1, {}, false};
  std::vector<MomentSample> at{{{2.0}, {}}, {{2.0}, {}}};
  auto r = image_vs_polytope(at, point, 1e-9);
  CHECK(r.inside_fraction == 1.0);
  CHECK(r.coverage_gap == 0.0);

  const auto seg = convex_hull({{Rational(0)}, {Rational(3)}});
  std::vector<MomentSample> outside{{{1.0}, {}}, {{4.0}, {}}};
  CHECK(image_vs_polytope(outside, seg, 1e-9).inside_fraction == 0.5);
  CHECK_THROWS_AS(image_vs_polytope({{{1.0, 2.0}, {}}}, seg, 1e-9), DimensionMismatch);
}

TEST_CASE("distance to hull") {
  const std::vector<std::vector<double>> tri{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(distance_to_hull({0.2, 0.2, 0.2, 0.2}, tri) < 1e-12);
  CHECK(distance_to_hull({1, 1, 1, 1}, tri) == doctest::Approx(1.5));
  CHECK(distance_to_hull({-1, 0, 0, 0}, tri) == doctest::Approx(1.0));
  CHECK(distance_to_hull({0.5, 0.5, -0.5, 0}, tri) == doctest::Approx(0.5));
}

TEST_CASE("Gr(2,4) moment image lies in the value polytope") {
  const auto A = IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{{2, 1, 1, 1, 1, 1},
                                                                           {1, 2, 1, 1, 0, 1},
                                                                           {1, 1, 2, 1, 2, 1},
                                                                           {1, 1, 1, 2, 2, 1},
                                                                           {1, 1, 1, 1, 1, 2}});
  const auto samples = sample_moment_image(A, 300, 1);
  std::vector<RationalVector> cols;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    RationalVector c;
    for (const auto& x : A.column(j)) c.emplace_back(x);
    cols.push_back(c);
  }
  const auto P = convex_hull(cols);
  CHECK(image_vs_polytope(samples, P, 1e-9).inside_fraction == 1.0);
}

TEST_CASE("svg output") {
  const auto seg = convex_hull({{Rational(0)}, {Rational(3)}});
  const auto empty = render_svg({}, seg, {0, 0});
  CHECK(empty.find("<line") != std::string::npos);
  CHECK(empty.find("<circle") == std::string::npos);
  const auto samples = sample_moment_image(row({1, 0, 3}), 20, 42);
  CHECK(render_svg(samples, seg, {0, 0}) == render_svg(samples, seg, {0, 0}));

  const auto sq = convex_hull({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  const auto svg = render_svg({}, sq, {0, 1});
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK_THROWS_AS(render_svg({}, sq, {0, 2}), DimensionMismatch);
  CHECK_THROWS_AS(emit_svg({}, sq, {0, 1}, "/nonexistent-dir/x.svg"), IOError);
}
