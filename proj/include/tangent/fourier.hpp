#pragma once

#include <span>
#include <vector>

#include "tangent/trig_poly.hpp"

namespace tangent {

/// Angle of grid point i on the uniform grid of n points covering [0, 2π).
double grid_angle(int i, int n);

/// Uniform grid [0, 2π) with n points.
std::vector<double> uniform_grid(int n);

bool is_power_of_two(int n);

/// Fourier coefficients of samples taken on the uniform grid. The result
/// interpolates the samples: evaluating it at grid point i returns sample i
/// up to round-off. Frequencies run up to n/2.
TrigPoly<double> fourier_coefficients(std::span<const double> samples);

/// Samples of a trigonometric polynomial on the uniform n-point grid.
std::vector<double> sample(const TrigPoly<double>& poly, int n);

}  // namespace tangent
