// toricdeg command-line front end. Exit codes: 0 success, 2 verification failure,
// 1 usage or input errors.
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "toricdeg/errors.hpp"
#include "toricdeg/fixtures.hpp"
#include "toricdeg/io.hpp"
#include "toricdeg/poly_io.hpp"

using namespace toricdeg;

namespace {

struct Options {
  std::string in, matrix, order = "degrevlex", w, convention = "min", keep, t0 = "0", svg, project = "0,1", out_dir,
              names, golden, dump;
  std::int64_t degree_bound = 5;
  std::size_t samples = 2000;
  std::uint64_t seed = 42;
  double timeout = 0;
  bool json = false, refresh = false;
  std::vector<std::string> fixtures;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

WeightVector parse_weights(const std::string& s, std::size_t n) {
  WeightVector w;
  for (const auto& x : split(s)) {
    try {
      w.push_back(std::stoll(x));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--w", "'" + x + "' is not an integer");
    }
  }
  if (w.size() != n) throw CLI::ValidationError("--w", "expected " + std::to_string(n) + " weights");
  return w;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--t0", "'" + s + "' is not a rational number");
  }
}

void print_ideal(const Ideal& I, bool as_json) {
  if (as_json) std::cout << ideal_to_json(I).dump(2) << "\n";
  else std::cout << format_ideal_file(I);
}

std::string require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
  return value;
}

int cmd_gb(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto n = I.nvars();
  TermOrder order = TermOrder::degrevlex(n);
  if (o.order == "lex") {
    std::vector<std::size_t> prio(n);
    for (std::size_t i = 0; i < n; ++i) prio[i] = i;
    order = TermOrder::lex(prio);
  } else if (o.order == "weight") {
    order = TermOrder::weight(parse_weights(require(o.w, "--w"), n), parse_convention(o.convention),
                              TermOrder::lex_reversed(n));
  } else if (o.order != "degrevlex") {
    throw CLI::ValidationError("--order", "expected lex, degrevlex or weight");
  }
  const auto G = buchberger(I, order, stop);
  if (o.json) {
    json j = ideal_to_json(G.ideal());
    j["order"] = order.describe();
    j["leading_terms"] = json::array();
    for (const auto& l : G.leads()) j["leading_terms"].push_back(format_monomial(l, *I.vars()));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& g : G.elements()) std::cout << format_polynomial(g, order) << "\n";
    std::cout << "# " << G.size() << " generators\n";
  }
  return 0;
}

int cmd_initial(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto conv = parse_convention(o.convention);
  Ideal init;
  if (!o.matrix.empty()) init = initial_ideal(I, read_matrix(o.matrix).to_weight_rows(), conv, stop);
  else init = initial_ideal(I, parse_weights(require(o.w, "--w"), I.nvars()), conv, stop);
  print_ideal(init, o.json);
  return 0;
}

int cmd_toric(const Options& o, std::stop_token stop) {
  const auto A = read_matrix(require(o.matrix, "--matrix"));
  VarList names = split(o.names);
  if (names.empty())
    for (std::size_t j = 0; j < A.cols(); ++j) names.push_back("x" + std::to_string(j));
  print_ideal(toric_ideal(A, names, stop), o.json);
  return 0;
}

int cmd_family(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto F = family_ideal(I, parse_weights(require(o.w, "--w"), I.nvars()), parse_convention(o.convention), stop);
  if (o.json) std::cout << to_json(F).dump(2) << "\n";
  else print_ideal(F.ideal(), false);
  return 0;
}

int cmd_fiber(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto F = family_ideal(I, parse_weights(require(o.w, "--w"), I.nvars()), parse_convention(o.convention), stop);
  print_ideal(fiber(F, parse_rational(o.t0), stop), o.json);
  return 0;
}

int cmd_pipeline(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto R = valuation_pipeline(I, read_matrix(require(o.matrix, "--matrix")), parse_convention(o.convention), {}, stop);
  std::cout << to_json(R).dump(2) << "\n";
  return R.binomial_prime ? 0 : 2;
}

int cmd_embed(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto E = embed_value_semigroup(I, read_matrix(require(o.matrix, "--matrix")), parse_convention(o.convention),
                                       o.degree_bound, {}, stop);
  std::cout << to_json(E).dump(2) << "\n";
  return 0;
}

int cmd_degenerate(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto conv = parse_convention(o.convention);
  const auto E = embed_value_semigroup(I, read_matrix(require(o.matrix, "--matrix")), conv, o.degree_bound, {}, stop);
  const auto F = family_ideal(I, E.pipeline.certificate.w, conv, stop);
  json report = to_json(E);
  report["family"] = to_json(F);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    const std::filesystem::path dir(o.out_dir);
    write_text((dir / "init.ideal").string(), format_ideal_file(E.pipeline.init));
    write_text((dir / "toric.ideal").string(), format_ideal_file(E.pipeline.toric));
    write_text((dir / "kernel.ideal").string(), format_ideal_file(E.kernel_check));
    write_text((dir / "family.ideal").string(), format_ideal_file(F.ideal()));
    write_text((dir / "report.json").string(), report.dump(2) + "\n");
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_project(const Options& o, std::stop_token stop) {
  const auto I = read_ideal(require(o.in, "--in"));
  const auto R = projection_limit(I, split(require(o.keep, "--keep")), stop);
  std::cout << to_json(R).dump(2) << "\n";
  return 0;
}

int cmd_moment(const Options& o, std::stop_token) {
  const auto A = read_matrix(require(o.matrix, "--matrix"));
  std::vector<RationalVector> cols;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    RationalVector c;
    for (const auto& x : A.column(j)) c.emplace_back(x);
    cols.push_back(std::move(c));
  }
  const auto P = convex_hull(cols);
  const auto samples = sample_moment_image(A, o.samples, o.seed);
  const auto proj = split(o.project);
  std::pair<std::size_t, std::size_t> ij{0, A.rows() > 1 ? 1 : 0};
  if (proj.size() == 2) ij = {std::stoul(proj[0]), std::stoul(proj[1])};
  else if (proj.size() == 1) ij = {std::stoul(proj[0]), std::stoul(proj[0])};
  if (!o.svg.empty()) emit_svg(samples, P, ij, o.svg);
  const auto cmp = image_vs_polytope(samples, P);
  json out = moment_dump(samples, P);
  out["inside_fraction"] = cmp.inside_fraction;
  out["coverage_gap"] = cmp.coverage_gap;
  if (!o.dump.empty()) write_text(o.dump, out.dump() + "\n");
  if (o.json || o.dump.empty()) std::cout << out.dump() << "\n";
  else std::cout << "inside_fraction " << cmp.inside_fraction << "\ncoverage_gap " << cmp.coverage_gap << "\n";
  return 0;
}

int cmd_fixtures_list() {
  for (const auto& n : fixture_names()) std::cout << n << "  " << load_fixture(n).summary << "\n";
  return 0;
}

int cmd_fixtures_run(const Options& o, std::stop_token stop) {
  std::vector<std::string> names = o.fixtures;
  if (names.empty()) throw CLI::RequiredError("fixture name");
  if (names.size() == 1 && names[0] == "all") names = fixture_names();
  RunOptions ro{o.golden.empty() ? default_golden_dir() : o.golden, o.refresh};
  bool ok = true;
  json all = json::array();
  for (const auto& n : names) {
    const auto fx = load_fixture(n);
    const auto r = run_fixture(fx, ro, stop);
    ok = ok && r.passed();
    if (o.json) {
      all.push_back(r.report);
      continue;
    }
    for (const auto& c : r.checks)
      std::cout << (c.passed ? "PASS " : "FAIL ") << n << "." << c.name << "  " << c.detail << "\n";
  }
  if (o.json) std::cout << all.dump(2) << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric degenerations from valuations: Gröbner families, value semigroups, projections"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--timeout", o.timeout, "Cancel the computation after this many seconds");

  auto with_in = [&](CLI::App* s) { s->add_option("--in", o.in, "Ideal file (text or JSON)")->check(CLI::ExistingFile); };
  auto with_conv = [&](CLI::App* s) {
    s->add_option("--convention", o.convention, "min|max")->check(CLI::IsMember({"min", "max"}));
  };
  auto with_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "JSON output"); };
  auto with_matrix = [&](CLI::App* s) { s->add_option("--matrix", o.matrix, "Integer matrix JSON")->check(CLI::ExistingFile); };

  auto* gb = app.add_subcommand("gb", "Reduced Gröbner basis");
  with_in(gb), with_json(gb), with_conv(gb);
  gb->add_option("--order", o.order, "lex|degrevlex|weight")->check(CLI::IsMember({"lex", "degrevlex", "weight"}));
  gb->add_option("--w", o.w, "Weight vector v1,v2,...");

  auto* initial = app.add_subcommand("initial", "Initial ideal for a weight vector or matrix");
  with_in(initial), with_json(initial), with_conv(initial), with_matrix(initial);
  initial->add_option("--w", o.w, "Weight vector");

  auto* toric = app.add_subcommand("toric", "Toric ideal of an integer matrix");
  with_matrix(toric), with_json(toric);
  toric->add_option("--names", o.names, "Variable names a,b,c");

  auto* family = app.add_subcommand("family", "One-parameter Gröbner family");
  with_in(family), with_json(family), with_conv(family);
  family->add_option("--w", o.w, "Weight vector");

  auto* fib = app.add_subcommand("fiber", "Fiber of the family at t = t0");
  with_in(fib), with_json(fib), with_conv(fib);
  fib->add_option("--w", o.w, "Weight vector");
  fib->add_option("--t0", o.t0, "Rational parameter value");

  auto* pipeline = app.add_subcommand("pipeline", "Initial ideal vs toric ideal of the value matrix");
  with_in(pipeline), with_matrix(pipeline), with_conv(pipeline);

  auto* embed = app.add_subcommand("embed", "Embed the value semigroup algebra as a monomial subalgebra");
  with_in(embed), with_matrix(embed), with_conv(embed);
  embed->add_option("--degree-bound", o.degree_bound, "Check graded dimensions up to this degree");

  auto* degen = app.add_subcommand("degenerate", "Embedding report plus ideal files for every computed ideal");
  with_in(degen), with_matrix(degen), with_conv(degen);
  degen->add_option("--degree-bound", o.degree_bound, "Check graded dimensions up to this degree");
  degen->add_option("--out-dir", o.out_dir, "Directory for report.json and *.ideal files");

  auto* project = app.add_subcommand("project", "Degeneration by projection onto the kept coordinates");
  with_in(project);
  project->add_option("--keep", o.keep, "Kept variables a,b,c");

  auto* moment = app.add_subcommand("moment", "Sample the moment image of the torus orbit");
  with_matrix(moment), with_json(moment);
  moment->add_option("--samples", o.samples, "Number of samples");
  moment->add_option("--seed", o.seed, "Sampler seed");
  moment->add_option("--svg", o.svg, "Write a scatter plot");
  moment->add_option("--project", o.project, "Coordinates i,j shown in the plot");
  moment->add_option("--dump", o.dump, "Write the sample dump JSON");

  auto* fixtures = app.add_subcommand("fixtures", "Bundled worked examples");
  fixtures->require_subcommand(1);
  auto* flist = fixtures->add_subcommand("list", "List fixtures");
  auto* frun = fixtures->add_subcommand("run", "Run fixtures and compare with expectations");
  frun->add_option("names", o.fixtures, "Fixture names or 'all'");
  frun->add_option("--golden", o.golden, "Directory with frozen oracle output");
  frun->add_flag("--refresh-figures", o.refresh, "Rewrite rendered figures");
  with_json(frun);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    if (rc != 0)
      std::cerr << "usage: toricdeg {gb|initial|toric|family|fiber|pipeline|embed|degenerate|project|moment|fixtures} [options]\n";
    return rc == 0 ? 0 : 1;
  }

  std::stop_source cancel;
  std::jthread timer;
  if (o.timeout > 0) {
    timer = std::jthread([&cancel, secs = o.timeout](std::stop_token st) {
      std::mutex m;
      std::condition_variable_any cv;
      std::unique_lock lock(m);
      cv.wait_for(lock, st, std::chrono::duration<double>(secs), [] { return false; });
      if (!st.stop_requested()) cancel.request_stop();
    });
  }
  const auto stop = cancel.get_token();

  try {
    if (gb->parsed()) return cmd_gb(o, stop);
    if (initial->parsed()) return cmd_initial(o, stop);
    if (toric->parsed()) return cmd_toric(o, stop);
    if (family->parsed()) return cmd_family(o, stop);
    if (fib->parsed()) return cmd_fiber(o, stop);
    if (pipeline->parsed()) return cmd_pipeline(o, stop);
    if (embed->parsed()) return cmd_embed(o, stop);
    if (degen->parsed()) return cmd_degenerate(o, stop);
    if (project->parsed()) return cmd_project(o, stop);
    if (moment->parsed()) return cmd_moment(o, stop);
    if (flist->parsed()) return cmd_fixtures_list();
    if (frun->parsed()) return cmd_fixtures_run(o, stop);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n" << app.get_subcommands().front()->help("", CLI::AppFormatMode::Sub);
    return 1;
  } catch (const VerificationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
