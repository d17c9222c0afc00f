#include "toricdeg/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toricdeg/errors.hpp"

namespace toricdeg {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Σ_f coeff[f] x_f <= bound
struct Inequality {
  RationalVector coeff;
  Rational bound;
  bool operator<(const Inequality& o) const {
    if (coeff != o.coeff) return coeff < o.coeff;
    return bound < o.bound;
  }
};

// Scale so the first nonzero coefficient has magnitude 1; keeps duplicates detectable.
Inequality normalized(Inequality q) {
  for (const auto& c : q.coeff)
    if (c != 0) {
      const Rational s = 1 / abs(c);
      for (auto& x : q.coeff) x *= s;
      q.bound *= s;
      break;
    }
  return q;
}

bool fourier_motzkin_feasible(std::vector<Inequality> sys, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<Inequality> pos, neg, rest;
    for (auto& q : sys) {
      const int s = sgn(q.coeff[v]);
      (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(q));
    }
    std::set<Inequality> next;
    for (auto& q : rest) next.insert(normalized(std::move(q)));
    for (const auto& p : pos)
      for (const auto& n : neg) {
        const Rational a = p.coeff[v], b = -n.coeff[v];
        Inequality c{RationalVector(nvars), p.bound * b + n.bound * a};
        for (std::size_t j = 0; j < nvars; ++j) c.coeff[j] = p.coeff[j] * b + n.coeff[j] * a;
        c.coeff[v] = 0;
        next.insert(normalized(std::move(c)));
      }
    sys.assign(next.begin(), next.end());
  }
  return std::all_of(sys.begin(), sys.end(), [](const Inequality& q) { return q.bound >= 0; });
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Primitive integral representative of a direction.
RationalVector primitive(RationalVector n) {
  Integer l = 1;
  for (const auto& x : n) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (auto& x : n) {
    x *= l;
    g = gcd(g, Integer(x.get_num()));
  }
  if (g != 0)
    for (auto& x : n) x /= g;
  return n;
}

Rational pow_q(const Rational& t, const Integer& e) {
  if (!e.fits_slong_p()) throw DegreeOverflow();
  long k = e.get_si();
  Rational base = k < 0 ? Rational(1 / t) : t;
  Rational r = 1;
  for (long i = 0; i < std::labs(k); ++i) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------------------
// Semigroup

Semigroup::Semigroup(std::vector<IntVector> gens, std::size_t degree_coord, std::vector<std::string> labels)
    : gens_(std::move(gens)), degree_coord_(degree_coord), labels_(std::move(labels)) {
  normalize();
}

Semigroup Semigroup::from_columns(const IntMatrix& M, std::size_t degree_coord, std::vector<std::string> labels) {
  std::vector<IntVector> g;
  for (std::size_t j = 0; j < M.cols(); ++j) g.push_back(M.column(j));
  return Semigroup(std::move(g), degree_coord, std::move(labels));
}

Semigroup Semigroup::total_degree(std::vector<IntVector> gens, std::vector<std::string> labels) {
  Semigroup s;
  s.gens_ = std::move(gens);
  s.degree_coord_.reset();
  s.labels_ = std::move(labels);
  s.normalize();
  return s;
}

void Semigroup::normalize() {
  if (!labels_.empty() && labels_.size() != gens_.size()) throw DimensionMismatch("one label per generator is required");
  std::vector<IntVector> g;
  std::vector<std::string> l;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].size() != gens_.front().size()) throw DimensionMismatch("generators of different lengths");
    if (degree_coord_ && *degree_coord_ >= gens_[i].size()) throw DimensionMismatch("degree coordinate out of range");
    if (std::find(g.begin(), g.end(), gens_[i]) != g.end()) continue;
    g.push_back(gens_[i]);
    if (!labels_.empty()) l.push_back(labels_[i]);
  }
  gens_ = std::move(g);
  labels_ = std::move(l);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (degree(i) <= 0) throw std::invalid_argument("semigroup generators must have positive degree");
}

Integer Semigroup::degree(std::size_t i) const {
  if (degree_coord_) return gens_[i][*degree_coord_];
  return std::accumulate(gens_[i].begin(), gens_[i].end(), Integer(0));
}

IntVector Semigroup::value(std::size_t i) const {
  if (!degree_coord_) return gens_[i];
  IntVector v;
  for (std::size_t k = 0; k < gens_[i].size(); ++k)
    if (k != *degree_coord_) v.push_back(gens_[i][k]);
  return v;
}

bool Semigroup::degree_one_generated() const {
  for (std::size_t i = 1; i < gens_.size(); ++i)
    if (degree(i) != degree(0)) return false;
  return true;
}

IntMatrix Semigroup::matrix() const {
  IntMatrix m(dim(), size());
  for (std::size_t j = 0; j < size(); ++j) {
    if (degree_coord_) {
      m(0, j) = degree(j);
      const auto v = value(j);
      for (std::size_t i = 0; i < v.size(); ++i) m(i + 1, j) = v[i];
    } else {
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = gens_[j][i];
    }
  }
  return m;
}

// ---------------------------------------------------------------------------------------
// Toric ideals

Ideal toric_ideal(const IntMatrix& A, const VarList& names, std::stop_token stop) {
  if (names.size() != A.cols()) throw DimensionMismatch("one variable name per matrix column is required");
  auto vars = make_vars(names);
  const auto basis = kernel_lattice(A);
  if (basis.empty()) return Ideal::zero(vars);
  std::vector<Polynomial> gens;
  for (const auto& u : basis) {
    Exponent plus(names.size()), minus(names.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (!u[j].fits_sint_p()) throw DegreeOverflow();
      const int x = static_cast<int>(u[j].get_si());
      (x > 0 ? plus : minus)[j] = std::abs(x);
    }
    gens.push_back(Polynomial::monomial(vars, plus) - Polynomial::monomial(vars, minus));
  }
  Ideal I(vars, std::move(gens));
  for (std::size_t i = 0; i < names.size(); ++i) I = saturate_variable(I, i, stop);
  if (I.is_homogeneous()) return Ideal(vars, I.gens(), Grading::standard(names.size()));
  return I;
}

// ---------------------------------------------------------------------------------------
// Convex hulls

bool in_convex_hull(const RationalVector& p, const std::vector<RationalVector>& points) {
  if (points.empty()) return false;
  const std::size_t d = p.size(), k = points.size();
  // [Q ; 1] λ = [p ; 1]
  std::vector<RationalVector> m(d + 1, RationalVector(k + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = points[j][i];
    m[i][k] = p[i];
  }
  for (std::size_t j = 0; j <= k; ++j) m[d][j] = 1;
  const auto piv = rref(m, k);
  for (std::size_t i = piv.size(); i < m.size(); ++i)
    if (m[i][k] != 0) return false;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < k; ++j)
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.push_back(j);
  std::vector<Inequality> sys;
  // λ_pivot = rhs - Σ m λ_free >= 0  ⇔  Σ m λ_free <= rhs
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Inequality q{RationalVector(free.size()), m[r][k]};
    for (std::size_t f = 0; f < free.size(); ++f) q.coeff[f] = m[r][free[f]];
    sys.push_back(std::move(q));
  }
  for (std::size_t f = 0; f < free.size(); ++f) {
    Inequality q{RationalVector(free.size()), 0};
    q.coeff[f] = -1;
    sys.push_back(std::move(q));
  }
  return fourier_motzkin_feasible(std::move(sys), free.size());
}

std::size_t affine_dimension(const std::vector<RationalVector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector v(points[i].size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(v));
  }
  return rref(diffs, points[0].size()).size();
}

PolytopeQ convex_hull(std::vector<RationalVector> points) {
  PolytopeQ P;
  if (points.empty()) return P;
  P.dim_ambient = points.front().size();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!in_convex_hull(points[i], others)) P.vertices.push_back(points[i]);
  }
  const std::size_t d = P.dim_ambient;
  if (d == 0 || d > 3 || affine_dimension(P.vertices) != d) return P;
  // facets: hyperplanes through d vertices with every vertex on one side
  const auto& V = P.vertices;
  std::set<std::pair<RationalVector, Rational>> facets;
  std::vector<std::size_t> idx(d);
  auto consider = [&] {
    std::vector<RationalVector> diffs;
    for (std::size_t k = 1; k < d; ++k) {
      RationalVector v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = V[idx[k]][j] - V[idx[0]][j];
      diffs.push_back(std::move(v));
    }
    RationalVector n(d);
    if (d == 1) {
      n[0] = 1;
    } else {
      auto m = diffs;
      const auto piv = rref(m, d);
      if (piv.size() != d - 1) return;
      std::size_t freec = 0;
      while (std::find(piv.begin(), piv.end(), freec) != piv.end()) ++freec;
      n[freec] = 1;
      for (std::size_t r = 0; r < piv.size(); ++r) n[piv[r]] = -m[r][freec];
    }
    n = primitive(n);
    const Rational b = dot(n, V[idx[0]]);
    bool le = true, ge = true;
    for (const auto& v : V) {
      const Rational s = dot(n, v);
      if (s > b) le = false;
      if (s < b) ge = false;
    }
    if (le) facets.insert({n, b});
    if (ge) {
      RationalVector m = n;
      for (auto& x : m) x = -x;
      facets.insert({m, -b});
    }
  };
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == d) {
      consider();
      return;
    }
    for (std::size_t i = start; i < V.size(); ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  P.halfspaces.assign(facets.begin(), facets.end());
  P.has_halfspaces = true;
  return P;
}

PolytopeQ delta_polytope(const Semigroup& S) {
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const auto v = S.value(i);
    const Integer n = S.degree(i);
    RationalVector p;
    for (const auto& x : v) {
      Rational q(x, n);
      q.canonicalize();
      p.push_back(q);
    }
    pts.push_back(std::move(p));
  }
  return convex_hull(std::move(pts));
}

// ---------------------------------------------------------------------------------------
// Semigroup constructions

Semigroup veronese(const Semigroup& S, unsigned n) {
  if (n == 0) throw std::invalid_argument("Veronese degree must be positive");
  if (!S.degree_coord()) throw std::invalid_argument("Veronese needs a degree coordinate");
  const std::size_t dc = *S.degree_coord();
  std::vector<IntVector> out;
  std::set<IntVector> seen;
  IntVector acc(S.dim());
  // The target degree is n grading units, the unit being the smallest generator degree.
  Integer unit = S.size() ? S.degree(0) : Integer(1);
  for (std::size_t i = 0; i < S.size(); ++i) unit = std::min(unit, S.degree(i));
  const Integer target = unit * n;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (acc[dc] == target) {
      if (seen.insert(acc).second) out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < S.size(); ++i) {
      if (acc[dc] + S.degree(i) > target) continue;
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += S.gens()[i][k];
      self(self, i);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] -= S.gens()[i][k];
    }
  };
  rec(rec, 0);
  return Semigroup(std::move(out), dc);
}

SemigroupEmbedding embed_semigroup(const Semigroup& S) {
  if (!S.degree_one_generated()) throw NotDegreeOneGenerated("generators have different degrees; apply veronese first");
  Integer N = 0;
  std::vector<IntVector> homog;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const auto a = S.value(i);
    Integer total = 0;
    for (const auto& x : a) {
      if (x < 0) throw std::invalid_argument("semigroup values must be non-negative; translate first");
      total += x;
    }
    N = std::max(N, total);
    IntVector g{1};
    g.insert(g.end(), a.begin(), a.end());
    homog.push_back(std::move(g));
  }
  if (N == 0) N = 1;
  return {N, Semigroup::total_degree(iota_images(N, homog), S.labels())};
}

RationalVector torus_point(const IntMatrix& A, const RationalVector& t) {
  if (t.size() != A.rows()) throw DimensionMismatch("one torus parameter per matrix row is required");
  for (const auto& x : t)
    if (x == 0) throw ZeroParameter();
  RationalVector p(A.cols(), Rational(1));
  for (std::size_t j = 0; j < A.cols(); ++j)
    for (std::size_t i = 0; i < A.rows(); ++i) p[j] *= pow_q(t[i], A(i, j));
  const Rational first = p.empty() ? Rational(1) : p.front();
  for (auto& x : p) x /= first;
  return p;
}

std::size_t count_degree_elements(const std::vector<IntVector>& gens, unsigned m) {
  if (gens.empty()) return m == 0 ? 1 : 0;
  std::set<IntVector> level{IntVector(gens.front().size())};
  for (unsigned k = 0; k < m; ++k) {
    std::set<IntVector> next;
    for (const auto& s : level)
      for (const auto& g : gens) {
        IntVector v = s;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += g[i];
        next.insert(std::move(v));
      }
    level = std::move(next);
  }
  return level.size();
}

}  // namespace toricdeg
