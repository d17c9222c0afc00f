#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toricdeg/intlat.hpp"
#include "toricdeg/toric.hpp"

namespace toricdeg {

using Complex = std::complex<double>;

struct ComplexPoint {
  std::vector<Complex> coords;
};

/// μ([z]) = Σ |z_j|² a_j / |z|², a_j the columns of `a`.
std::vector<double> moment(const IntMatrix& a, const ComplexPoint& z);

/// z_j = ∏ t_i^A(i,j), scaled so that the largest modulus is 1 (computed in log space).
ComplexPoint torus_point_float(const IntMatrix& A, const std::vector<Complex>& t);

struct MomentSample {
  std::vector<double> value;
  std::vector<Complex> source_t;
};

/// Sample i draws from an mt19937_64 seeded with splitmix64(seed + i): log-moduli uniform in
/// [-log_range, log_range], phases uniform in [0, 2π).
std::vector<MomentSample> sample_moment_image(const IntMatrix& A, std::size_t n, std::uint64_t seed,
                                              double log_range = 3.0);

struct ImageComparison {
  double inside_fraction = 0;
  double coverage_gap = 0;
};

/// Containment uses the facets of P when it has them and the distance to the hull
/// (Wolfe's minimum-norm point) otherwise.
ImageComparison image_vs_polytope(const std::vector<MomentSample>& samples, const PolytopeQ& P, double eps = 1e-9);

/// Euclidean distance from x to conv(points).
double distance_to_hull(const std::vector<double>& x, const std::vector<std::vector<double>>& points);

std::string render_svg(const std::vector<MomentSample>& samples, const PolytopeQ& P,
                       std::pair<std::size_t, std::size_t> proj);
/// Throws IOError.
void emit_svg(const std::vector<MomentSample>& samples, const PolytopeQ& P, std::pair<std::size_t, std::size_t> proj,
              const std::string& path);

}  // namespace toricdeg
