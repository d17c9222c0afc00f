#include "toricdeg/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>

#include "toricdeg/errors.hpp"
#include "toricdeg/poly_io.hpp"

#ifndef TORICDEG_FIXTURE_DIR
#define TORICDEG_FIXTURE_DIR "fixtures"
#endif

namespace toricdeg {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

Ideal ideal_of(const VarList& names, const std::vector<std::string>& gens) {
  auto vars = make_vars(names);
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, vars));
  return Ideal(vars, std::move(g));
}

Ideal ideal_from_text(const Vars& vars, const std::string& list) {
  // "(a, b, c)" as printed by format_ideal
  std::string body = list;
  if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
  std::vector<Polynomial> gens;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const auto piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto p = parse_polynomial(piece, vars);
    if (!p.is_zero()) gens.push_back(p);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Ideal(vars, std::move(gens));
}

Ideal plucker24() { return ideal_of({"p12", "p13", "p14", "p23", "p24", "p34"}, {"p12*p34 - p13*p24 + p14*p23"}); }

Ideal plucker25() {
  VarList names;
  std::vector<std::string> gens;
  auto p = [](int i, int j) { return "p" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) names.push_back(p(i, j));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k)
        for (int l = k + 1; l <= 5; ++l)
          gens.push_back(p(i, j) + "*" + p(k, l) + " - " + p(i, k) + "*" + p(j, l) + " + " + p(i, l) + "*" + p(j, k));
  return ideal_of(names, gens);
}

// Degree-3 Veronese coordinates of ℙ² and the quadrics cutting out its image.
std::vector<std::array<int, 3>> cubic_exponents() {
  std::vector<std::array<int, 3>> out;
  for (int a = 3; a >= 0; --a)
    for (int b = 3 - a; b >= 0; --b) out.push_back({a, b, 3 - a - b});
  return out;
}

std::string cubic_name(const std::array<int, 3>& e) {
  std::string s = "u_";
  const char* letters = "xyz";
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    s += letters[i];
    if (e[i] > 1) s += std::to_string(e[i]);
  }
  return s;
}

Ideal elliptic_p9() {
  const auto ex = cubic_exponents();
  VarList names;
  for (const auto& e : ex) names.push_back(cubic_name(e));
  std::vector<std::string> gens;
  const std::size_t n = ex.size();
  // u_a u_b - u_c u_d whenever a + b = c + d
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = a + 1; c < n; ++c)
        for (std::size_t d = c; d < n; ++d) {
          bool same = true;
          for (int i = 0; i < 3; ++i) same = same && ex[a][i] + ex[b][i] == ex[c][i] + ex[d][i];
          if (!same || (c == b && d == a)) continue;
          gens.push_back(names[a] + "*" + names[b] + " - " + names[c] + "*" + names[d]);
        }
  gens.push_back("u_y2z - u_x3 + u_xz2");
  return ideal_of(names, gens);
}

IntMatrix gr25_matrix() {
  // ν coordinates ordered (13, 14, 12, 15, 23, 34, 45); columns p12 … p45
  const Rows nu{
      {0, 0, 1, 0, 0, 0, 0},   // p12
      {1, 0, 0, 0, 0, 0, 0},   // p13
      {0, 1, 0, 0, 0, 0, 0},   // p14
      {0, 0, 0, 1, 0, 0, 0},   // p15
      {0, 0, 0, 0, 1, 0, 0},   // p23
      {-1, 0, 1, 0, 0, 1, 0},  // p24
      {0, -1, 1, 0, 0, 0, 1},  // p25
      {0, 0, 0, 0, 0, 1, 0},   // p34
      {1, -1, 0, 0, 0, 0, 1},  // p35
      {0, 0, 0, 0, 0, 0, 1},   // p45
  };
  Rows M{std::vector<std::int64_t>(10, 1)};
  for (int c : {6, 5, 4, 3, 2, 1, 0}) {
    std::vector<std::int64_t> row;
    for (const auto& v : nu) row.push_back(v[static_cast<std::size_t>(c)]);
    M.push_back(row);
  }
  return IntMatrix::from_rows(M);
}

IntMatrix plabic_matrix() {
  return IntMatrix::from_rows(Rows{{1, 1, 1, 1, 1, 1},
                                   {0, 0, 0, 0, 0, 1},
                                   {0, 0, 0, 1, 1, 1},
                                   {0, 1, 1, 1, 1, 2},
                                   {0, 0, 1, 0, 1, 1}});
}

IntMatrix gvector_matrix() {
  return IntMatrix::from_rows(Rows{{1, 1, 1, 1, 1, 1},
                                   {2, 1, 1, 1, 1, 1},
                                   {1, 2, 1, 1, 0, 1},
                                   {1, 1, 2, 1, 2, 1},
                                   {1, 1, 1, 2, 2, 1},
                                   {1, 1, 1, 1, 1, 2}});
}

IntMatrix drop_first_row(const IntMatrix& M) {
  IntMatrix out(M.rows() - 1, M.cols());
  for (std::size_t i = 1; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i - 1, j) = M(i, j);
  return out;
}

// ---------------------------------------------------------------------------------------

struct Runner {
  const Fixture& f;
  const RunOptions& opts;
  std::stop_token stop;
  FixtureResult res;
  std::map<std::string, Ideal> computed;

  void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    Check c{name, false, {}};
    try {
      auto [ok, detail] = body();
      c.passed = ok;
      c.detail = std::move(detail);
    } catch (const Cancelled&) {
      throw;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    res.checks.push_back(std::move(c));
  }

  std::pair<bool, std::string> ideal_eq(const Ideal& got, const std::string& key) {
    const auto* e = f.find(key);
    if (!e) throw std::logic_error("fixture " + f.name + " lacks expectation " + key);
    const auto want = ideal_from_text(got.vars(), e->value);
    const bool ok = same_ideal(got, want);
    return {ok, ok ? format_ideal(got) : "got " + format_ideal(got) + ", expected " + e->value};
  }

  void family_checks(const Ideal& init, const WeightVector& w) {
    const auto F = family_ideal(f.ideal, w, f.convention, stop);
    res.report["family"] = to_json(F);
    const auto f0 = fiber(F, 0, stop), f1 = fiber(F, 1, stop);
    check("fiber_one", [&] {
      const bool ok = same_ideal(f1, f.ideal);
      return std::pair{ok, format_ideal(f1)};
    });
    check("fiber_zero", [&] {
      const bool ok = same_ideal(f0, init);
      return std::pair{ok, format_ideal(f0)};
    });
    check("flatness", [&] {
      for (std::int64_t m = 0; m <= 6; ++m) {
        const auto a = graded_dimension(f0, m), b = graded_dimension(f1, m);
        if (a != b) return std::pair{false, "degree " + std::to_string(m) + ": " + std::to_string(a) + " vs " + std::to_string(b)};
      }
      return std::pair{true, std::string("equal Hilbert functions for m <= 6")};
    });
    if (f.find("family")) {
      check("family", [&] {
        const auto want = ideal_from_text(F.vars, f.find("family")->value);
        const auto got = F.ideal();
        bool ok = same_ideal(got, want) && got.gens().size() == want.gens().size();
        std::string text = "(";
        for (std::size_t i = 0; i < F.gens.size(); ++i) text += (i ? ", " : "") + format_polynomial(F.gens[i]);
        text += ")";
        return std::pair{ok, text};
      });
    }
    if (f.find("family_shape")) {
      // every generator is a trinomial whose t-free part is its initial form
      check("family_shape", [&] {
        const std::size_t tv = F.vars->size() - 1;
        std::vector<int> map(F.vars->size());
        for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
        map[tv] = -1;
        std::size_t trinomials = 0;
        for (const auto& g : F.gens) {
          std::vector<Term> free;
          for (const auto& t : g.terms())
            if (t.exp[tv] == 0) free.push_back(t);
          const auto base = g.substitute(tv, 1).rebase(f.ideal.vars(), map);
          const auto lead = Polynomial(F.vars, std::move(free)).rebase(f.ideal.vars(), map);
          if (g.size() == 3 && lead.size() == 2 && lead == initial_form(base, w, f.convention)) ++trinomials;
        }
        const bool ok = F.gens.size() == 5 && trinomials == 5;
        return std::pair{ok, std::to_string(F.gens.size()) + " generators, " + std::to_string(trinomials) +
                                 " trinomials with t on exactly one term"};
      });
    }
  }

  PipelineResult pipeline_checks() {
    const auto R = valuation_pipeline(f.ideal, *f.matrix, f.convention, {}, stop);
    res.report["pipeline"] = to_json(R);
    computed["init"] = R.init;
    computed["toric"] = R.toric;
    check("init", [&] { return ideal_eq(R.init, "init"); });
    check("binomial_prime", [&] { return std::pair{R.binomial_prime, std::string(R.binomial_prime ? "init = toric ideal" : "init differs from toric ideal")}; });
    family_checks(R.init, R.certificate.w);
    return R;
  }

  void moment_checks(const IntMatrix& A, const PolytopeQ& P, std::pair<std::size_t, std::size_t> proj,
                     const std::string& figure) {
    const auto samples = sample_moment_image(A, 2000, 42);
    const auto cmp = image_vs_polytope(samples, P, 1e-9);
    res.report["moment"] = {{"inside_fraction", cmp.inside_fraction}, {"coverage_gap", cmp.coverage_gap},
                            {"samples", samples.size()}, {"seed", 42}};
    check("moment_inside", [&] { return std::pair{cmp.inside_fraction == 1.0, "inside fraction " + std::to_string(cmp.inside_fraction)}; });
    double diameter = 0;
    for (const auto& a : P.vertices)
      for (const auto& b : P.vertices) {
        double d2 = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d2 += std::pow(Rational(a[i] - b[i]).get_d(), 2);
        diameter = std::max(diameter, std::sqrt(d2));
      }
    res.report["moment"]["diameter"] = diameter;
    check("moment_coverage", [&] {
      return std::pair{cmp.coverage_gap < 0.2 * diameter,
                       "coverage gap " + std::to_string(cmp.coverage_gap) + " (tolerance 0.2 x diameter " + std::to_string(diameter) + ")"};
    });
    if (P.dim_ambient == 1) {
      check("moment_extremes", [&] {
        double lo = samples[0].value[0], hi = lo;
        for (const auto& s : samples) lo = std::min(lo, s.value[0]), hi = std::max(hi, s.value[0]);
        const double a = P.vertices.front()[0].get_d(), b = P.vertices.back()[0].get_d();
        return std::pair{lo <= a + 0.05 && hi >= b - 0.05, "sample range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"};
      });
    }
    if (opts.golden_dir.empty()) return;
    const auto path = (std::filesystem::path(opts.golden_dir) / figure).string();
    const auto svg = render_svg(samples, P, proj);
    if (opts.refresh_figures) write_text(path, svg);
    check("figure", [&] {
      if (!std::filesystem::exists(path)) return std::pair{false, path + " missing"};
      return std::pair{read_text(path) == svg, path};
    });
  }

  void projection_checks() {
    const auto R = projection_limit(f.ideal, f.kept, stop);
    res.report["projection"] = to_json(R);
    computed["limit"] = R.limit;
    computed["cone_part"] = R.cone_part;
    computed["closure"] = R.closure;
    if (f.find("limit")) check("limit", [&] { return ideal_eq(R.limit, "limit"); });
    if (f.find("cone_part")) check("cone_part", [&] { return ideal_eq(R.cone_part, "cone_part"); });
    if (f.find("closure")) check("closure", [&] { return ideal_eq(R.closure, "closure"); });
    check("scheme_check", [&] { return std::pair{R.scheme_check, std::string("limit with dropped variables set to zero vs closure")}; });
    if (f.find("set_check"))
      check("set_check", [&] { return std::pair{R.set_check, std::string("V(limit) = V(closure, dropped) ∪ V(cone part)")}; });
  }

  void golden_checks() {
    if (opts.golden_dir.empty()) return;
    const auto path = std::filesystem::path(opts.golden_dir) / (f.name + ".json");
    if (!std::filesystem::exists(path)) return;
    const auto g = json::parse(read_text(path.string()));
    if (g.contains("ideals"))
      for (const auto& [key, val] : g["ideals"].items()) {
        check("oracle_" + key, [&, key = key, val = val] {
          auto it = computed.find(key);
          if (it == computed.end()) return std::pair{false, "nothing computed under " + key};
          const auto want = ideal_from_json(val);
          const auto got = extend(it->second, want.vars());
          const bool ok = same_vars(it->second.vars(), want.vars()) && same_ideal(got, want);
          return std::pair{ok, ok ? std::string("agrees with ") + g.value("oracle", "oracle") : "got " + format_ideal(it->second)};
        });
      }
    if (g.contains("hilbert")) {
      check("oracle_hilbert", [&] {
        const auto& h = res.report.at("witness");
        return std::pair{h == g["hilbert"], h.dump()};
      });
    }
  }
};

}  // namespace

const Expectation* Fixture::find(const std::string& key) const {
  for (const auto& e : expected)
    if (e.key == key) return &e;
  return nullptr;
}

bool FixtureResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* FixtureResult::find(const std::string& check) const {
  for (const auto& c : checks)
    if (c.name == check) return &c;
  return nullptr;
}

std::string default_golden_dir() { return (std::filesystem::path(TORICDEG_FIXTURE_DIR) / "golden").string(); }

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"gr24_gvector", "gr24_plabic", "gr25_family",  "elliptic",
                                              "twisted_cubic", "hyperbola",  "elliptic_projection"};
  return names;
}

Fixture load_fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (name == "gr24_gvector") {
    f.summary = "Gr(2,4) Plücker ideal with g-vector valuation";
    f.ideal = plucker24();
    f.matrix = gvector_matrix();
    f.expected = {{"init", "(p13*p24 - p14*p23)", "stated"}};
  } else if (name == "gr24_plabic") {
    f.summary = "Gr(2,4) Plücker ideal with plabic-graph valuation (value of p23 derived)";
    f.ideal = plucker24();
    f.matrix = plabic_matrix();
    f.expected = {{"init", "(p13*p24 - p14*p23)", "stated"}};
  } else if (name == "gr25_family") {
    f.summary = "Gr(2,5) Plücker ideal with the 7-dimensional valuation table";
    f.ideal = plucker25();
    f.matrix = gr25_matrix();
    f.convention = Convention::Max;
    f.expected = {{"init",
                   "(p13*p24 - p12*p34, p13*p25 - p12*p35, p14*p25 - p12*p45, p14*p35 - p13*p45, p24*p35 - p25*p34)",
                   "stated"},
                  {"family_shape", "5 trinomials", "stated"},
                  {"vertices", "10", "stated"}};
  } else if (name == "elliptic") {
    f.summary = "Plane cubic y^2 z = x^3 - x z^2 with weights (1,0,3)";
    f.ideal = ideal_of({"x", "y", "z"}, {"y^2*z - x^3 + x*z^2"});
    f.matrix = IntMatrix::from_rows(Rows{{1, 1, 1}, {1, 0, 3}});
    f.expected = {{"init", "(y^2*z - x^3)", "stated"},
                  {"family", "(y^2*z - x^3 + t^4*x*z^2)", "stated"},
                  {"images", "y^2*z, y^3, z^3", "stated"},
                  {"image_semigroup", "[[2,1],[3,0],[0,3]]", "stated"},
                  {"N", "3", "stated"},
                  {"delta", "[0, 3]", "stated"}};
  } else if (name == "twisted_cubic") {
    f.summary = "Twisted cubic projected from the point [0:0:1:0]";
    f.ideal = ideal_of({"u3", "u2", "u1", "u0"}, {"u2^2 - u3*u1", "u1^2 - u2*u0", "u2*u1 - u3*u0"});
    f.matrix = IntMatrix::from_rows(Rows{{1, 1, 1, 1}, {3, 2, 1, 0}});
    f.kept = {"u3", "u2", "u0"};
    f.expected = {{"toric", "(u2^2 - u3*u1, u1^2 - u2*u0, u2*u1 - u3*u0)", "stated"},
                  {"limit", "(u3*u1, u1^2, u2*u1, u2^3 - u3^2*u0)", "stated"},
                  {"cone_part", "(1)", "stated"},
                  {"closure", "(u2^3 - u3^2*u0)", "stated"}};
  } else if (name == "hyperbola") {
    f.summary = "Conic xy = z^2 projected from [0:1:0]";
    f.ideal = ideal_of({"x", "y", "z"}, {"x*y - z^2"});
    f.kept = {"x", "z"};
    f.expected = {{"limit", "(x*y)", "stated"},
                  {"cone_part", "(x)", "stated"},
                  {"closure", "(0)", "stated"},
                  {"set_check", "true", "definitional"}};
  } else if (name == "elliptic_projection") {
    f.summary = "Plane cubic in its cubic Veronese embedding, projected to three coordinates";
    f.ideal = elliptic_p9();
    f.kept = {"u_y3", "u_y2z", "u_z3"};
    f.expected = {{"closure", "(u_y2z^3 - u_y3^2*u_z3)", "stated"}, {"hilbert_differs", "true", "stated"}};
  } else {
    throw std::out_of_range("unknown fixture '" + name + "'");
  }
  return f;
}

FixtureResult run_fixture(const Fixture& f, const RunOptions& opts, std::stop_token stop) {
  Runner r{f, opts, stop, {}, {}};
  r.res.name = f.name;
  r.res.report["name"] = f.name;
  r.res.report["summary"] = f.summary;
  r.res.report["ideal"] = ideal_to_json(f.ideal);
  const auto fail = [&](const std::string& stage, const std::exception& e) {
    r.res.checks.push_back({stage, false, e.what()});
  };

  if (f.name == "gr24_gvector" || f.name == "gr24_plabic" || f.name == "gr25_family") {
    try {
      const auto R = r.pipeline_checks();
      if (f.name == "gr24_gvector") {
        const auto E = embed_value_semigroup(f.ideal, *f.matrix, f.convention, 5, {}, stop);
        r.res.report["embedding"] = to_json(E);
        r.computed["kernel"] = E.kernel_check;
        r.check("dims", [&] { return std::pair{true, to_json(E.dims_checked).dump()}; });
        const auto A = drop_first_row(*f.matrix);
        std::vector<RationalVector> cols;
        for (std::size_t j = 0; j < A.cols(); ++j) {
          RationalVector c;
          for (const auto& x : A.column(j)) c.emplace_back(x);
          cols.push_back(c);
        }
        r.moment_checks(A, convex_hull(cols), {0, 1}, "gr24_moment.svg");
      }
      if (f.name == "gr24_plabic") {
        // x_ij ↦ e^ν(p_ij) · p12
        const auto target = make_vars({"e13", "e14", "e23", "e24", "p12"});
        std::vector<Polynomial> images;
        for (std::size_t j = 0; j < f.matrix->cols(); ++j) {
          Exponent e(5);
          for (std::size_t i = 1; i < f.matrix->rows(); ++i) e[i - 1] = static_cast<Exponent::value_type>((*f.matrix)(i, j).get_si());
          e[4] = 1;
          images.push_back(Polynomial::monomial(target, e));
        }
        const auto K = ring_map_kernel(*f.ideal.vars(), images, Ideal::zero(target), stop);
        r.computed["kernel"] = K;
        r.check("ring_map_kernel", [&] {
          const bool ok = same_ideal(K, R.toric);
          return std::pair{ok, format_ideal(K)};
        });
      }
      if (f.name == "gr25_family") {
        r.check("vertices", [&] {
          const auto P = delta_polytope(R.semigroup);
          std::size_t hits = 0;
          for (std::size_t j = 0; j < R.semigroup.size(); ++j) {
            RationalVector p;
            for (const auto& x : R.semigroup.value(j)) p.emplace_back(x);
            hits += std::find(P.vertices.begin(), P.vertices.end(), p) != P.vertices.end();
          }
          return std::pair{hits == 10 && P.vertices.size() == 10,
                           std::to_string(hits) + " of " + std::to_string(R.semigroup.size()) + " value vectors are vertices"};
        });
      }
    } catch (const Cancelled&) {
      throw;
    } catch (const std::exception& e) {
      fail("pipeline", e);
    }
  } else if (f.name == "elliptic") {
    try {
      r.pipeline_checks();
      const auto E = embed_value_semigroup(f.ideal, *f.matrix, f.convention, 5, {}, stop);
      r.res.report["embedding"] = to_json(E);
      r.computed["kernel"] = E.kernel_check;
      r.check("images", [&] {
        std::string got;
        for (std::size_t k = 0; k < E.images.size(); ++k) got += (k ? ", " : "") + format_polynomial(E.images[k]);
        return std::pair{got == f.find("images")->value, got};
      });
      r.check("image_semigroup", [&] {
        const auto got = to_json(E).at("image_semigroup");
        json arr = json::array();
        for (const auto& l : E.labels) arr.push_back(got.at(l));
        const auto want = json::parse(f.find("image_semigroup")->value);
        return std::pair{arr == want && E.N == std::stoi(f.find("N")->value), arr.dump() + ", N = " + E.N.get_str()};
      });
      r.check("dims", [&] { return std::pair{E.dims_checked.size() == 6, to_json(E.dims_checked).dump()}; });
      const auto P = delta_polytope(E.pipeline.semigroup);
      r.check("delta", [&] {
        const bool ok = P.vertices.size() == 2 && P.vertices[0] == RationalVector{0} && P.vertices[1] == RationalVector{3};
        return std::pair{ok, polytope_to_json(P).dump()};
      });
      r.moment_checks(drop_first_row(*f.matrix), P, {0, 0}, "elliptic_moment.svg");
    } catch (const Cancelled&) {
      throw;
    } catch (const std::exception& e) {
      fail("pipeline", e);
    }
  } else {
    try {
      if (f.find("toric")) {
        const auto T = toric_ideal(*f.matrix, *f.ideal.vars(), stop);
        r.computed["toric"] = T;
        r.check("toric", [&] { return r.ideal_eq(T, "toric"); });
      }
      r.projection_checks();
      if (f.name == "elliptic_projection") {
        const auto& lim = r.computed.at("limit");
        std::vector<Polynomial> proj = extend(r.computed.at("closure"), f.ideal.vars()).gens();
        for (const auto& v : *f.ideal.vars())
          if (std::find(f.kept.begin(), f.kept.end(), v) == f.kept.end())
            proj.push_back(Polynomial::variable(f.ideal.vars(), var_index(*f.ideal.vars(), v)));
        const Ideal W(f.ideal.vars(), std::move(proj));
        const auto rows = hilbert_witness(lim, W, {0, 1, 2, 3, 4});
        r.res.report["witness"] = to_json(rows);
        r.check("hilbert_differs", [&] {
          const bool differs = std::any_of(rows.begin(), rows.end(), [](const DimensionRow& d) { return d.lhs != d.rhs; });
          return std::pair{differs, to_json(rows).dump()};
        });
      }
    } catch (const Cancelled&) {
      throw;
    } catch (const std::exception& e) {
      fail("projection", e);
    }
  }
  r.golden_checks();

  json checks = json::array();
  for (const auto& c : r.res.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  r.res.report["checks"] = checks;
  r.res.report["passed"] = r.res.passed();
  return r.res;
}

}  // namespace toricdeg
