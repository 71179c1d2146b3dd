#pragma once

#include <functional>
#include <vector>

namespace tangent {

/// The line x·ω = p with ω = (cos theta, sin theta). (theta, p) and
/// (theta + π, −p) denote the same line.
struct LineParam {
  double theta = 0.0;
  double p = 0.0;

  /// Representative with theta in [0, π).
  LineParam canonical() const;
};

/// ∫_{-1}^{1} g(t) / sqrt(1 − t²) dt by the n-node Gauss–Chebyshev rule of
/// the first kind. Exact for polynomial g of degree < 2n.
double gauss_chebyshev(const std::function<double(double)>& g, int nodes);

/// f₀(x) = 1 / (π sqrt(1 − |x|²)) inside the unit disk, 0 outside.
double disk_density(double x1, double x2);

/// Chord integral of f₀ along the line. Equals 1 for |p| < 1 and 0 for
/// |p| > 1; throws SingularLine for |p| = 1.
double radon_disk_density(const LineParam& line, int nodes = 16);

/// ∫ ∂_p²(R f₀)(ω, p) p^k dp in the sense of distributions, i.e. the k-th
/// moment of δ′(p + 1) − δ′(p − 1). k must be even and nonnegative.
double second_p_derivative_moments(int k);

/// C² bump of unit mass supported on [−h, h] (a rescaled quartic B-spline).
double mollifier(double x, double h);

/// The same moment computed from samples of radon_disk_density: R f₀ is
/// convolved with the bump of half-width h, differentiated twice by central
/// differences, and integrated against p^k. Converges as O(h²).
double mollified_second_derivative_moment(int k, double h);

struct SinogramSample {
  double theta;
  double p;
  double value;
};

/// Sweeps radon_disk_density over theta × p. Samples with |p| = 1 exactly are
/// omitted and their count is returned through `skipped`.
std::vector<SinogramSample> disk_sinogram(const std::vector<double>& thetas,
                                          const std::vector<double>& offsets, int* skipped);

}  // namespace tangent
