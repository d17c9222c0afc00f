#include "doctest.h"
#include "support.hpp"
#include "toricdeg/errors.hpp"
#include "toricdeg/fixtures.hpp"
#include "toricdeg/io.hpp"

using namespace testing;

TEST_CASE("ideal file parsing") {
  const auto I = parse_ideal_file("# elliptic curve\nvars: x, y, z\n\ny^2*z - x^3 + x*z^2\n");
  CHECK(*I.vars() == VarList{"x", "y", "z"});
  REQUIRE(I.gens().size() == 1);
  CHECK(format_ideal(I) == "(-x^3 + y^2*z + x*z^2)");

  const auto E = parse_ideal_file("vars: a, b\n");
  CHECK(E.gens().empty());

  const auto R = parse_ideal_file(format_ideal_file(I));
  CHECK(same_ideal(R, I));
}

TEST_CASE("syntax errors carry offsets into the file") {
  const std::string text = "vars: x, y\nx*y - 1\nx +* y\n";
  try {
    parse_ideal_file(text);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() >= text.find("x +*"));
    CHECK(e.position() < text.size());
  }
  CHECK_THROWS_AS(parse_ideal_file("x*y\n"), SyntaxError);           // missing vars line
  CHECK_THROWS_AS(parse_ideal_file("vars: x\nx*q\n"), UnknownVariable);
}

TEST_CASE("json round trips") {
  const auto I = ideal_of(vars_of({"p12", "p13", "p14", "p23", "p24", "p34"}), {"p12*p34 - p13*p24 + p14*p23"});
  CHECK(same_ideal(ideal_from_json(ideal_to_json(I)), I));

  const auto M = IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {1, 0, 3}});
  const auto j = matrix_to_json(M);
  CHECK(j.dump() == "[[1,1,1],[1,0,3]]");
  CHECK(matrix_from_json(j) == M);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), DimensionMismatch);

  const auto S = semigroup_from_json(semigroup_to_json(Semigroup::from_columns(M)));
  CHECK(S.size() == 3);
  CHECK(S.degree_coord() == std::optional<std::size_t>(0));
  const auto T = semigroup_from_json(semigroup_to_json(Semigroup::total_degree(S.gens())));
  CHECK(!T.degree_coord());
}

TEST_CASE("missing files raise IOError") {
  CHECK_THROWS_AS(read_text("/nonexistent/ideal.txt"), IOError);
  CHECK_THROWS_AS(read_ideal("/nonexistent/ideal.txt"), IOError);
}

TEST_CASE("fixture registry") {
  CHECK(fixture_names().size() == 7);
  CHECK_THROWS_AS(load_fixture("nope"), std::out_of_range);
  const auto r = run_fixture(load_fixture("hyperbola"), RunOptions{"", false});
  CHECK(r.passed());
  CHECK(r.find("set_check") != nullptr);
}
