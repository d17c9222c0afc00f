#include "toricdeg/moment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "toricdeg/errors.hpp"

namespace toricdeg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> to_double(const RationalVector& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

// Solve the affine minimum-norm problem on the points `Q`: min |Σ μ_i q_i| with Σ μ_i = 1.
std::vector<double> affine_min_norm(const std::vector<std::vector<double>>& Q) {
  const std::size_t k = Q.size();
  std::vector<std::vector<double>> A(k + 1, std::vector<double>(k + 2, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) A[i][j] = dot(Q[i], Q[j]);
    A[i][k] = 1;
    A[k][i] = 1;
  }
  A[k][k + 1] = 1;
  for (std::size_t c = 0; c <= k; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r <= k; ++r)
      if (std::abs(A[r][c]) > std::abs(A[p][c])) p = r;
    std::swap(A[c], A[p]);
    if (std::abs(A[c][c]) < 1e-300) continue;
    for (std::size_t r = 0; r <= k; ++r) {
      if (r == c) continue;
      const double f = A[r][c] / A[c][c];
      for (std::size_t j = c; j <= k + 1; ++j) A[r][j] -= f * A[c][j];
    }
  }
  std::vector<double> mu(k);
  for (std::size_t i = 0; i < k; ++i) mu[i] = std::abs(A[i][i]) < 1e-300 ? 0.0 : A[i][k + 1] / A[i][i];
  return mu;
}

struct Frame {
  double x0, y0, sx, sy;
  double px(double x) const { return 20 + (x - x0) * sx; }
  double py(double y) const { return 380 - (y - y0) * sy; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Andrew's monotone chain, counterclockwise without collinear points.
std::vector<std::pair<double, double>> hull2d(std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

std::vector<double> moment(const IntMatrix& a, const ComplexPoint& z) {
  if (a.cols() != z.coords.size()) throw DimensionMismatch("moment: one weight column per coordinate");
  double peak = 0;
  for (const auto& c : z.coords) peak = std::max(peak, std::abs(c));
  if (peak == 0 || !std::isfinite(peak)) throw ZeroVector();
  std::vector<double> mu(a.rows(), 0.0);
  double total = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double m = std::norm(z.coords[j] / peak);
    total += m;
    for (std::size_t i = 0; i < a.rows(); ++i) mu[i] += m * a(i, j).get_d();
  }
  for (auto& x : mu) x /= total;
  return mu;
}

ComplexPoint torus_point_float(const IntMatrix& A, const std::vector<Complex>& t) {
  if (t.size() != A.rows()) throw DimensionMismatch("one torus parameter per row");
  for (const auto& x : t)
    if (x == Complex(0)) throw ZeroParameter();
  std::vector<double> logmod(A.cols(), 0.0), phase(A.cols(), 0.0);
  for (std::size_t j = 0; j < A.cols(); ++j)
    for (std::size_t i = 0; i < A.rows(); ++i) {
      const double e = A(i, j).get_d();
      logmod[j] += e * std::log(std::abs(t[i]));
      phase[j] += e * std::arg(t[i]);
    }
  const double top = *std::max_element(logmod.begin(), logmod.end());
  ComplexPoint z;
  for (std::size_t j = 0; j < A.cols(); ++j) z.coords.push_back(std::polar(std::exp(logmod[j] - top), phase[j]));
  return z;
}

std::vector<MomentSample> sample_moment_image(const IntMatrix& A, std::size_t n, std::uint64_t seed, double log_range) {
  std::vector<MomentSample> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::mt19937_64 rng(splitmix64(seed + s));
    std::uniform_real_distribution<double> lm(-log_range, log_range), ph(0.0, 2 * std::numbers::pi);
    std::vector<Complex> t;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      const double r = lm(rng);
      t.push_back(std::polar(std::exp(r), ph(rng)));
    }
    out.push_back(MomentSample{moment(A, torus_point_float(A, t)), std::move(t)});
  }
  return out;
}

double distance_to_hull(const std::vector<double>& x, const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw DimensionMismatch("hull of no points");
  std::vector<std::vector<double>> P;
  double scale = 0;
  for (const auto& p : points) {
    if (p.size() != x.size()) throw DimensionMismatch("point dimension");
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] - x[i];
    scale = std::max(scale, dot(q, q));
    P.push_back(std::move(q));
  }
  if (scale == 0) return 0;
  const double tol = 1e-15 * scale;

  // Wolfe's minimum-norm-point algorithm
  std::size_t start = 0;
  for (std::size_t i = 1; i < P.size(); ++i)
    if (dot(P[i], P[i]) < dot(P[start], P[start])) start = i;
  std::vector<std::size_t> S{start};
  std::vector<double> lambda{1.0};
  std::vector<double> y = P[start];
  for (int major = 0; major < 1000; ++major) {
    std::size_t j = 0;
    for (std::size_t i = 1; i < P.size(); ++i)
      if (dot(P[i], y) < dot(P[j], y)) j = i;
    if (dot(y, y) - dot(P[j], y) <= tol || std::find(S.begin(), S.end(), j) != S.end()) break;
    S.push_back(j);
    lambda.push_back(0.0);
    for (int minor = 0; minor < 1000; ++minor) {
      std::vector<std::vector<double>> Q;
      for (auto i : S) Q.push_back(P[i]);
      const auto mu = affine_min_norm(Q);
      if (std::all_of(mu.begin(), mu.end(), [](double m) { return m > 1e-14; })) {
        lambda = mu;
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] <= 1e-14 && lambda[i] - mu[i] > 0) theta = std::min(theta, lambda[i] / (lambda[i] - mu[i]));
      for (std::size_t i = 0; i < mu.size(); ++i) lambda[i] = lambda[i] + theta * (mu[i] - lambda[i]);
      std::vector<std::size_t> S2;
      std::vector<double> l2;
      for (std::size_t i = 0; i < S.size(); ++i)
        if (lambda[i] > 1e-14) {
          S2.push_back(S[i]);
          l2.push_back(lambda[i]);
        }
      S = std::move(S2);
      lambda = std::move(l2);
      if (S.size() <= 1) break;
    }
    if (S.empty()) {
      S = {j};
      lambda = {1.0};
    }
    const double sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    y.assign(x.size(), 0.0);
    for (std::size_t k = 0; k < S.size(); ++k)
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += lambda[k] / sum * P[S[k]][i];
  }
  return std::sqrt(dot(y, y));
}

ImageComparison image_vs_polytope(const std::vector<MomentSample>& samples, const PolytopeQ& P, double eps) {
  std::vector<std::vector<double>> verts;
  for (const auto& v : P.vertices) verts.push_back(to_double(v));
  for (const auto& s : samples)
    if (s.value.size() != P.dim_ambient) throw DimensionMismatch("sample and polytope dimensions differ");
  ImageComparison out;
  if (samples.empty()) return out;

  std::size_t inside = 0;
  for (const auto& s : samples) {
    bool in = true;
    if (P.has_halfspaces) {
      for (const auto& [a, b] : P.halfspaces) {
        const auto ad = to_double(a);
        if (dot(ad, s.value) > b.get_d() + eps * std::sqrt(std::max(1.0, dot(ad, ad)))) {
          in = false;
          break;
        }
      }
    } else {
      in = distance_to_hull(s.value, verts) <= eps;
    }
    inside += in;
  }
  out.inside_fraction = static_cast<double>(inside) / static_cast<double>(samples.size());
  for (const auto& v : verts) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
      double d = 0;
      for (std::size_t i = 0; i < v.size(); ++i) d += (v[i] - s.value[i]) * (v[i] - s.value[i]);
      best = std::min(best, d);
    }
    out.coverage_gap = std::max(out.coverage_gap, std::sqrt(best));
  }
  return out;
}

std::string render_svg(const std::vector<MomentSample>& samples, const PolytopeQ& P,
                       std::pair<std::size_t, std::size_t> proj) {
  const std::size_t d = P.dim_ambient;
  const bool strip = d == 1;
  if (proj.first >= d || (!strip && proj.second >= d)) throw DimensionMismatch("projection index out of range");
  auto coords = [&](const std::vector<double>& v) {
    return std::pair<double, double>{v[proj.first], strip ? 0.0 : v[proj.second]};
  };
  std::vector<std::pair<double, double>> vp, sp;
  for (const auto& v : P.vertices) vp.push_back(coords(to_double(v)));
  for (const auto& s : samples) sp.push_back(coords(s.value));

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  for (const auto* set : {&vp, &sp})
    for (const auto& [x, y] : *set) {
      if (first) {
        x0 = x1 = x;
        y0 = y1 = y;
        first = false;
      }
      x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  const double w = x1 - x0 > 0 ? x1 - x0 : 1, h = y1 - y0 > 0 ? y1 - y0 : 1;
  const Frame F{x0, y0, 360 / w, 360 / h};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  os << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  if (strip) {
    const double y = 200;
    os << "<line x1=\"" << fmt(F.px(x0)) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(F.px(x1)) << "\" y2=\"" << fmt(y)
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (double t = std::ceil(x0); t <= std::floor(x1); t += 1) {
      os << "<line x1=\"" << fmt(F.px(t)) << "\" y1=\"190.000\" x2=\"" << fmt(F.px(t))
         << "\" y2=\"210.000\" stroke=\"black\"/>\n";
      os << "<text x=\"" << fmt(F.px(t)) << "\" y=\"230.000\" font-size=\"12\" text-anchor=\"middle\">" << t
         << "</text>\n";
    }
    for (const auto& [x, yy] : sp)
      os << "<circle cx=\"" << fmt(F.px(x)) << "\" cy=\"" << fmt(y - 12) << "\" r=\"1.5\" fill=\"steelblue\" fill-opacity=\"0.5\"/>\n";
  } else {
    const auto hull = hull2d(vp);
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i)
      os << (i ? " " : "") << fmt(F.px(hull[i].first)) << "," << fmt(F.py(hull[i].second));
    os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const auto& [x, y] : sp)
      os << "<circle cx=\"" << fmt(F.px(x)) << "\" cy=\"" << fmt(F.py(y))
         << "\" r=\"1.5\" fill=\"steelblue\" fill-opacity=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void emit_svg(const std::vector<MomentSample>& samples, const PolytopeQ& P, std::pair<std::size_t, std::size_t> proj,
              const std::string& path) {
  const auto text = render_svg(samples, P, proj);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IOError("write to " + path + " failed");
}

}  // namespace toricdeg
