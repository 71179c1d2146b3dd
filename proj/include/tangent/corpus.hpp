#pragma once

#include <random>

#include "tangent/geometry.hpp"
#include "tangent/rational.hpp"

namespace tangent {

/// Random generators shared by the identity suite, the tests and the CLI.
/// Deterministic for a given engine state.

/// num/den with num in [lo, hi] and den in [1, max_den].
Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den);

/// Even density c0 + c2 cos 2θ + s2 sin 2θ with rational coefficients.
/// With `bounded_away`, c0 in [1, 2] and |c2| + |s2| <= 1/2.
TrigPoly<Rational> random_density(std::mt19937_64& rng, bool bounded_away);

/// Axis-aligned ellipse with rational semi-axes in [1/2, 3]; ρ² is exact.
SupportFunction random_exact_ellipse(std::mt19937_64& rng, int grid = kDefaultGrid);

/// Ellipse with axis ratio in [1/3, 3] (log-uniform), major scale in [1/2, 2]
/// and tilt in [0, π).
SupportFunction random_ellipse(std::mt19937_64& rng, int grid = kDefaultGrid);

/// Exact ellipse with m random densities; the last one is bounded away from zero.
TangentialData random_tangential_data(std::mt19937_64& rng, int m, int grid = kDefaultGrid);

}  // namespace tangent
