// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>

#include "support.hpp"
#include "toricdeg/fixtures.hpp"
#include "toricdeg/moment.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::map<std::string, FixtureResult> results;

const FixtureResult& fixture(const std::string& name) {
  auto it = results.find(name);
  if (it == results.end()) {
    RunOptions opts{default_golden_dir(), false};
    it = results.emplace(name, run_fixture(load_fixture(name), opts)).first;
  }
  return it->second;
}

// Named checks of a fixture, plus any oracle comparisons it carries.
Outcome from_fixture(const std::string& name, std::initializer_list<const char*> checks, bool with_oracle = true) {
  Outcome o;
  const auto& r = fixture(name);
  for (const char* c : checks) {
    const auto* k = r.find(c);
    o.require(k && k->passed, name + "." + c + (k ? ": " + k->detail : ": not run"));
  }
  if (with_oracle)
    for (const auto& c : r.checks)
      if (c.name.rfind("oracle_", 0) == 0) o.require(c.passed, name + "." + c.name + ": " + c.detail);
  for (const auto& c : r.checks)
    if (c.name == "pipeline" || c.name == "projection") o.require(false, name + " aborted: " + c.detail);
  return o;
}

Outcome p1() {
  Outcome o;
  std::mt19937_64 rng(20240601);

  // reduced-basis uniqueness under generator shuffles and rescaling
  for (const auto& name : fixture_names()) {
    const auto f = load_fixture(name);
    const auto ref = canonical(f.ideal);
    std::uniform_int_distribution<int> coef(1, 7);
    bool same = true;
    for (int k = 0; k < 20 && same; ++k) {
      auto gens = f.ideal.gens();
      std::shuffle(gens.begin(), gens.end(), rng);
      for (auto& g : gens) g = g.scale(Rational(coef(rng), coef(rng)));
      const auto G = canonical(Ideal(f.ideal.vars(), gens));
      same = G.gens() == ref.gens();
    }
    o.require(same, "basis of " + name + " depends on generator order");
  }

  // flatness of every family
  for (const char* name : {"gr24_gvector", "gr24_plabic", "gr25_family", "elliptic"}) {
    const auto* c = fixture(name).find("flatness");
    o.require(c && c->passed, std::string(name) + " flatness: " + (c ? c->detail : "not run"));
  }

  // toric ideals vanish on exact torus points
  std::vector<IntMatrix> mats;
  std::vector<VarList> names;
  for (const auto& name : fixture_names()) {
    const auto f = load_fixture(name);
    if (!f.matrix) continue;
    const auto& rep = fixture(name).report;
    if (rep.contains("pipeline")) mats.push_back(matrix_from_json(rep["pipeline"]["toric_matrix"]));
    else mats.push_back(*f.matrix);
    names.push_back(*f.ideal.vars());
  }
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const auto T = toric_ideal(mats[k], names[k]);
    std::size_t bad = 0;
    for (int s = 0; s < 50; ++s) {
      RationalVector t;
      for (std::size_t i = 0; i < mats[k].rows(); ++i) {
        int n = 0;
        while (n == 0) n = num(rng);
        Rational q(n, den(rng));
        q.canonicalize();
        t.push_back(q);
      }
      const auto pt = torus_point(mats[k], t);
      for (const auto& g : T.gens()) bad += g.evaluate(pt) != 0;
    }
    o.require(bad == 0, "toric ideal of matrix " + std::to_string(k) + " misses " + std::to_string(bad) + " evaluations");
  }

  // initial forms are multiplicative
  auto v = vars_of({"a", "b", "c", "d"});
  std::uniform_int_distribution<int> wd(-3, 3);
  std::size_t broken = 0;
  for (int k = 0; k < 200; ++k) {
    auto f = random_poly(rng, v, 4, 5), g = random_poly(rng, v, 4, 5);
    if (f.is_zero() || g.is_zero()) {
      --k;
      continue;
    }
    const WeightVector w{wd(rng), wd(rng), wd(rng), wd(rng)};
    const auto conv = k % 2 ? Convention::Max : Convention::Min;
    broken += initial_form(f * g, w, conv) != initial_form(f, w, conv) * initial_form(g, w, conv);
  }
  o.require(broken == 0, std::to_string(broken) + " initial-form products differ");

  // sampler determinism
  const auto A = IntMatrix::from_rows(std::vector<std::vector<std::int64_t>>{{1, 0, 3}});
  const auto s1 = sample_moment_image(A, 500, 7), s2 = sample_moment_image(A, 500, 7);
  bool same = s1.size() == s2.size();
  for (std::size_t i = 0; same && i < s1.size(); ++i) same = s1[i].value == s2[i].value && s1[i].source_t == s2[i].source_t;
  o.require(same, "sampling is not reproducible for a fixed seed");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1 Gr(2,4) g-vector degeneration", [] { return from_fixture("gr24_gvector", {"init", "binomial_prime"}); }},
      {"A2 Gr(2,4) plabic degeneration",
       [] { return from_fixture("gr24_plabic", {"init", "binomial_prime", "ring_map_kernel"}); }},
      {"A3 elliptic family, fiber and embedding",
       [] { return from_fixture("elliptic", {"family", "fiber_zero", "images", "image_semigroup", "dims"}); }},
      {"A4 hyperbola projection", [] { return from_fixture("hyperbola", {"limit", "cone_part", "closure"}); }},
      {"A5 twisted cubic projection",
       [] { return from_fixture("twisted_cubic", {"limit", "cone_part", "closure", "scheme_check"}); }},
      {"A6 elliptic moment image",
       [] { return from_fixture("elliptic", {"delta", "moment_inside", "moment_coverage", "moment_extremes"}, false); }},
      {"A7 Gr(2,5) family",
       [] {
         return from_fixture("gr25_family",
                             {"init", "binomial_prime", "family_shape", "fiber_one", "fiber_zero", "vertices"});
       }},
      {"A8 non-reducedness witness", [] { return from_fixture("elliptic_projection", {"hilbert_differs", "scheme_check"}); }},
      {"P1 property suites", p1},
  };

  bool all = true;
  for (const auto& [label, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << label.substr(0, 2) << (o.ok ? " PASS " : " FAIL ") << label.substr(3) << " (" << buf << ")\n";
    for (const auto& n : o.notes) std::cout << "   " << n << "\n";
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
