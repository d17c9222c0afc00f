#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "toricdeg/io.hpp"

namespace toricdeg {

/// Where an expected value comes from: "stated" (printed in the source text),
/// "definitional" (forced by the construction) or "computed" (frozen oracle output).
struct Expectation {
  std::string key;
  std::string value;
  std::string origin;
};

struct Fixture {
  std::string name;
  std::string summary;
  Ideal ideal;
  std::optional<IntMatrix> matrix;
  Convention convention = Convention::Min;
  std::vector<std::string> kept;  // projection fixtures
  std::vector<Expectation> expected;

  const Expectation* find(const std::string& key) const;
};

const std::vector<std::string>& fixture_names();
/// Throws std::out_of_range for unknown names.
Fixture load_fixture(const std::string& name);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureResult {
  std::string name;
  std::vector<Check> checks;
  json report;

  bool passed() const;
  const Check* find(const std::string& check) const;
};

struct RunOptions {
  /// Directory with frozen oracle output (<name>.json) and rendered figures.
  std::string golden_dir;
  /// Rewrite figures instead of comparing them.
  bool refresh_figures = false;
};

/// Computes everything the fixture exercises and compares against its expectations.
/// Errors thrown by the library are reported as failed checks, not propagated.
FixtureResult run_fixture(const Fixture& f, const RunOptions& opts = {}, std::stop_token stop = {});

std::string default_golden_dir();

}  // namespace toricdeg
