#include "toricdeg/degeneration.hpp"

#include <algorithm>
#include <numeric>

#include "toricdeg/errors.hpp"
#include "toricdeg/poly_io.hpp"

namespace toricdeg {

namespace {

std::optional<Grading> grading_of(const Ideal& I) {
  return I.has_grading() ? std::optional<Grading>(I.grading()) : std::nullopt;
}

bool equal_column_sums(const IntMatrix& M) {
  Integer first;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < M.rows(); ++i) s += M(i, j);
    if (j == 0) first = s;
    else if (s != first) return false;
  }
  return true;
}

IntMatrix select_rows(const IntMatrix& M, const std::vector<std::size_t>& rows) {
  IntMatrix out(rows.size(), M.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = M(rows[i], j);
  return out;
}

IntMatrix select_cols(const IntMatrix& M, const std::vector<std::size_t>& cols) {
  IntMatrix out(M.rows(), cols.size());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = M(i, cols[j]);
  return out;
}

// All k-subsets of `pool` in lexicographic order.
void subsets(const std::vector<std::size_t>& pool, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

struct Coordinates {
  std::string route;
  Integer N;
  std::vector<IntVector> c;  // per generator
};

// Coordinates of the embedded semigroup: either rows of M that already form a
// constant-sum non-negative system of full rank, or the ι-image of translated rows.
Coordinates embedding_coordinates(const Semigroup& S, std::size_t rho) {
  const IntMatrix A = S.matrix();  // degree row first
  std::vector<std::size_t> value_rows(A.rows() - 1);
  std::iota(value_rows.begin(), value_rows.end(), 1);

  std::vector<std::vector<std::size_t>> cands;
  subsets(value_rows, rho, cands);
  for (const auto& rows : cands) {
    const IntMatrix R = select_rows(A, rows);
    bool nonneg = true;
    for (std::size_t i = 0; i < R.rows() && nonneg; ++i)
      for (std::size_t j = 0; j < R.cols(); ++j)
        if (R(i, j) < 0) nonneg = false;
    if (!nonneg || !equal_column_sums(R) || rank(R) != rho) continue;
    Coordinates out{"direct", 0, {}};
    for (std::size_t j = 0; j < R.cols(); ++j) {
      out.c.push_back(R.column(j));
      if (j == 0)
        for (const auto& x : out.c.back()) out.N += x;
    }
    return out;
  }

  // greedy rank completion on top of the degree row
  std::vector<std::size_t> chosen{0};
  for (auto r : value_rows) {
    if (chosen.size() == rho) break;
    auto trial = chosen;
    trial.push_back(r);
    if (rank(select_rows(A, trial)) == trial.size()) chosen = std::move(trial);
  }
  if (chosen.size() != rho) throw NoIndependentSubset("value rows do not reach full rank");
  std::vector<IntVector> homog;
  for (std::size_t j = 0; j < A.cols(); ++j) homog.push_back(IntVector{1});
  for (std::size_t k = 1; k < chosen.size(); ++k) {
    const auto row = A.row(chosen[k]);
    const Integer lo = *std::min_element(row.begin(), row.end());
    for (std::size_t j = 0; j < A.cols(); ++j) homog[j].push_back(row[j] - lo);
  }
  Integer N = 0;
  for (const auto& h : homog) N = std::max(N, std::accumulate(h.begin() + 1, h.end(), Integer(0)));
  if (N == 0) N = 1;
  return Coordinates{"iota", N, iota_images(N, homog)};
}

}  // namespace

// ---------------------------------------------------------------------------------------
// Families

FamilyIdeal family_ideal(const Ideal& J, const WeightVector& w, Convention convention, std::stop_token stop) {
  if (w.size() != J.nvars()) throw DimensionMismatch("weight length differs from variable count");
  if (!J.is_homogeneous()) throw NotHomogeneous("the family is only defined for homogeneous ideals");
  const auto target = initial_ideal(J, w, convention, stop);

  FamilyIdeal F;
  F.base = J;
  F.w = w;
  F.convention = convention;
  std::vector<Polynomial> source = J.gens();
  {
    std::vector<Polynomial> forms;
    for (const auto& g : source) forms.push_back(initial_form(g, w, convention));
    if (!same_ideal(Ideal(J.vars(), forms), target)) {
      source = buchberger(J, TermOrder::weight(w, convention, TermOrder::lex_reversed(J.nvars())), stop).elements();
      F.from_groebner_basis = true;
    }
  }

  VarList names = *J.vars();
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "_";
  names.push_back(t);
  F.vars = make_vars(names);
  const std::size_t tv = names.size() - 1;
  for (const auto& g : source) {
    std::vector<std::int64_t> weights;
    for (const auto& term : g.terms()) weights.push_back(weight_of(w, term.exp));
    const auto [lo, hi] = std::minmax_element(weights.begin(), weights.end());
    std::vector<Term> terms;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto& term = g.terms()[k];
      Exponent e(names.size());
      for (std::size_t i = 0; i < term.exp.size(); ++i) e[i] = term.exp[i];
      const std::int64_t shift = convention == Convention::Min ? weights[k] - *lo : *hi - weights[k];
      if (shift > std::numeric_limits<Exponent::value_type>::max()) throw DegreeOverflow();
      e[tv] = static_cast<Exponent::value_type>(shift);
      terms.push_back(Term{term.coeff, std::move(e)});
    }
    F.gens.emplace_back(F.vars, std::move(terms));
  }
  return F;
}

Ideal fiber(const FamilyIdeal& F, const Rational& t0, std::stop_token stop) {
  const std::size_t tv = F.vars->size() - 1;
  std::vector<int> map(F.vars->size());
  std::iota(map.begin(), map.end(), 0);
  map[tv] = -1;
  std::vector<Polynomial> out;
  for (const auto& g : F.gens) out.push_back(g.substitute(tv, t0).rebase(F.base.vars(), map));
  return canonical(Ideal(F.base.vars(), std::move(out), grading_of(F.base)), stop);
}

// ---------------------------------------------------------------------------------------
// Valuations

PipelineResult valuation_pipeline(const Ideal& J, const IntMatrix& M, Convention convention, std::vector<std::string> labels,
                                  std::stop_token stop) {
  if (M.cols() != J.nvars()) throw DimensionMismatch("one matrix column per variable is required");
  if (labels.empty()) labels = *J.vars();
  PipelineResult R;
  R.certificate = weight_from_matrix(J, M, convention, std::int64_t{1} << 20, stop);
  R.init = initial_ideal(J, R.certificate.w, convention, stop);

  bool has_degree_row = M.rows() > 0;
  for (std::size_t j = 0; j < M.cols() && has_degree_row; ++j)
    if (M(0, j) != J.grading().weights()[j]) has_degree_row = false;
  IntMatrix full = M;
  if (!has_degree_row) {
    full = IntMatrix(M.rows() + 1, M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) {
      full(0, j) = J.grading().weights()[j];
      for (std::size_t i = 0; i < M.rows(); ++i) full(i + 1, j) = M(i, j);
    }
  }
  R.semigroup = Semigroup::from_columns(full, 0, labels);
  R.homogenized = !equal_column_sums(full);
  R.toric_matrix = R.homogenized ? homogenize_matrix(full) : full;
  R.toric = toric_ideal(R.toric_matrix, *J.vars(), stop);
  R.binomial_prime = same_ideal(R.init, R.toric);
  return R;
}

EmbeddingReport embed_value_semigroup(const Ideal& J, const IntMatrix& M, Convention convention, std::int64_t degree_bound,
                                      std::vector<std::string> labels, std::stop_token stop) {
  if (labels.empty()) labels = *J.vars();
  EmbeddingReport rep;
  rep.labels = labels;
  rep.pipeline = valuation_pipeline(J, M, convention, labels, stop);
  if (!rep.pipeline.binomial_prime)
    throw VerificationFailed("binomial_prime", "initial ideal " + format_ideal(rep.pipeline.init) +
                                                   " is not the toric ideal of the value matrix");
  const Semigroup& S = rep.pipeline.semigroup;
  if (S.size() != J.nvars()) throw DimensionMismatch("value matrix has repeated columns");
  if (!S.degree_one_generated()) throw NotDegreeOneGenerated("value semigroup is not generated in one degree");
  const IntMatrix A = S.matrix();
  const std::size_t rho = rank(A);

  const auto coords = embedding_coordinates(S, rho);
  rep.route = coords.route;
  rep.N = coords.N;
  rep.c_vectors = coords.c;

  // candidate variable subsets: vertex columns first, then all, each in lexicographic order
  const auto P = delta_polytope(S);
  std::vector<std::size_t> all(J.nvars()), vertex;
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t j = 0; j < J.nvars(); ++j) {
    const auto v = S.value(j);
    RationalVector p;
    for (const auto& x : v) {
      Rational q(x, S.degree(j));
      q.canonicalize();
      p.push_back(q);
    }
    if (std::find(P.vertices.begin(), P.vertices.end(), p) != P.vertices.end()) vertex.push_back(j);
  }
  std::vector<std::vector<std::size_t>> order;
  subsets(vertex, rho, order);
  {
    std::vector<std::vector<std::size_t>> rest;
    subsets(all, rho, rest);
    for (auto& s : rest)
      if (std::find(order.begin(), order.end(), s) == order.end()) order.push_back(std::move(s));
  }

  auto images_for = [&](const std::vector<std::size_t>& sel) {
    std::vector<Polynomial> ims;
    for (const auto& c : coords.c) {
      Exponent e(J.nvars());
      for (std::size_t k = 0; k < sel.size(); ++k) {
        if (!c[k].fits_sint_p()) throw DegreeOverflow();
        e[sel[k]] = static_cast<Exponent::value_type>(c[k].get_si());
      }
      ims.push_back(Polynomial::monomial(J.vars(), e));
    }
    return ims;
  };
  auto standard = [&](const std::vector<std::size_t>& sel, const std::vector<Polynomial>& ims) {
    // lex tie-break with every unselected variable above the selected ones
    std::vector<std::size_t> prio;
    for (std::size_t i = J.nvars(); i-- > 0;)
      if (std::find(sel.begin(), sel.end(), i) == sel.end()) prio.push_back(i);
    for (std::size_t i = J.nvars(); i-- > 0;)
      if (std::find(sel.begin(), sel.end(), i) != sel.end()) prio.push_back(i);
    const auto G =
        buchberger(J, TermOrder::weight(rep.pipeline.certificate.w, convention, TermOrder::lex(prio)), stop);
    return std::all_of(ims.begin(), ims.end(), [&](const Polynomial& m) {
      const auto& e = m.terms().front().exp;
      return std::none_of(G.leads().begin(), G.leads().end(), [&](const Exponent& l) { return l.divides(e); });
    });
  };
  auto finite = [&](const std::vector<std::size_t>& sel) {
    std::vector<Polynomial> gens = rep.pipeline.init.gens();
    for (auto i : sel) gens.push_back(Polynomial::variable(J.vars(), i));
    const Ideal F(J.vars(), std::move(gens));
    for (std::size_t i = 0; i < J.nvars(); ++i)
      if (std::find(sel.begin(), sel.end(), i) == sel.end() && !in_radical(F, Polynomial::variable(J.vars(), i)))
        return false;
    return true;
  };

  std::optional<std::vector<std::size_t>> fallback;
  std::optional<std::vector<std::size_t>> chosen;
  for (const auto& sel : order) {
    if (stop.stop_requested()) throw Cancelled();
    if (rank(select_cols(A, sel)) != rho) continue;
    const auto ims = images_for(sel);
    if (!standard(sel, ims)) continue;
    if (finite(sel)) {
      chosen = sel;
      break;
    }
    if (!fallback) fallback = sel;
  }
  rep.finite_over_subset = chosen.has_value();
  if (!chosen) chosen = fallback;
  if (!chosen) throw NoIndependentSubset("no set of independent variables carries standard images");
  rep.independent_vars = *chosen;
  rep.images = images_for(*chosen);

  rep.kernel_check = ring_map_kernel(labels, rep.images, J, stop);
  IntMatrix C(rho, coords.c.size());
  for (std::size_t j = 0; j < coords.c.size(); ++j)
    for (std::size_t i = 0; i < rho; ++i) C(i, j) = coords.c[j][i];
  rep.toric = toric_ideal(C, labels, stop);
  if (!same_ideal(rep.kernel_check, rep.toric))
    throw VerificationFailed("kernel", format_ideal(rep.kernel_check) + " differs from " + format_ideal(rep.toric));

  for (std::int64_t m = 0; m <= degree_bound; ++m) {
    const auto lhs = graded_dimension(J, m);
    const auto rhs = static_cast<std::int64_t>(count_degree_elements(coords.c, static_cast<unsigned>(m)));
    rep.dims_checked.push_back({m, lhs, rhs});
    if (lhs != rhs)
      throw VerificationFailed("dims", "degree " + std::to_string(m) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
  return rep;
}

// ---------------------------------------------------------------------------------------
// Projections

ProjectionReport projection_limit(const Ideal& I, const std::vector<std::string>& kept, std::stop_token stop) {
  const auto& vars = *I.vars();
  if (kept.empty() || kept.size() >= vars.size()) throw std::invalid_argument("kept variables must be a nonempty proper subset");
  std::vector<bool> keep(vars.size(), false);
  for (const auto& k : kept) keep[var_index(vars, k)] = true;
  std::vector<std::string> dropped, kept_ordered;
  ProjectionReport R;
  R.w.assign(vars.size(), 0);
  Polynomial a = Polynomial::constant(I.vars(), 1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (keep[i]) {
      kept_ordered.push_back(vars[i]);
      continue;
    }
    R.w[i] = -1;
    dropped.push_back(vars[i]);
    a = a * Polynomial::variable(I.vars(), i);
  }
  R.limit = initial_ideal(I, R.w, Convention::Min, stop);
  R.cone_part = saturate(R.limit, a, stop);
  R.closure = eliminate(I, kept_ordered, stop);
  R.scheme_check = same_ideal(canonical(substitute_zero(R.limit, dropped), stop), R.closure);

  std::vector<Polynomial> base = I.gens();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (keep[i]) base.push_back(Polynomial::variable(I.vars(), i));
  const Ideal B(I.vars(), std::move(base));
  R.base_locus_empty = true;
  for (std::size_t i = 0; i < vars.size() && R.base_locus_empty; ++i)
    R.base_locus_empty = in_radical(B, Polynomial::variable(I.vars(), i));

  std::vector<Polynomial> proj = extend(R.closure, I.vars()).gens();
  for (const auto& d : dropped) proj.push_back(Polynomial::variable(I.vars(), var_index(vars, d)));
  R.set_check = same_radical(R.limit, product(Ideal(I.vars(), std::move(proj)), R.cone_part));
  return R;
}

std::vector<DimensionRow> hilbert_witness(const Ideal& I, const Ideal& J, const std::vector<std::int64_t>& degrees) {
  if (!same_vars(I.vars(), J.vars())) throw DimensionMismatch("ideals live in different rings");
  std::vector<DimensionRow> out;
  for (auto m : degrees) out.push_back({m, graded_dimension(I, m), graded_dimension(J, m)});
  return out;
}

}  // namespace toricdeg
