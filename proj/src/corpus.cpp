#include "tangent/corpus.hpp"

#include <cmath>
#include <numbers>

namespace tangent {

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational out(num(rng), den(rng));
  out.canonicalize();
  return out;
}

TrigPoly<Rational> random_density(std::mt19937_64& rng, bool bounded_away) {
  if (bounded_away) {
    const Rational c0 = random_rational(rng, 4, 8, 1) / 4;
    const Rational c2 = random_rational(rng, -8, 8, 1) / 32;
    const Rational s2 = random_rational(rng, -8, 8, 1) / 32;
    return TrigPoly<Rational>({c0, Rational(0), c2}, {Rational(0), s2});
  }
  return TrigPoly<Rational>({random_rational(rng, -9, 9, 7), Rational(0), random_rational(rng, -9, 9, 7)},
                            {Rational(0), random_rational(rng, -9, 9, 7)});
}

SupportFunction random_exact_ellipse(std::mt19937_64& rng, int grid) {
  const Rational a = random_rational(rng, 1, 6, 1) / 2;
  const Rational b = random_rational(rng, 1, 6, 1) / 2;
  return make_ellipse(a, b, grid);
}

SupportFunction random_ellipse(std::mt19937_64& rng, int grid) {
  std::uniform_real_distribution<double> log_ratio(std::log(1.0 / 3.0), std::log(3.0));
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  std::uniform_real_distribution<double> tilt(0.0, std::numbers::pi);
  const double a = scale(rng);
  const double b = a * std::exp(log_ratio(rng));
  return make_ellipse(a, b, tilt(rng), grid);
}

TangentialData random_tangential_data(std::mt19937_64& rng, int m, int grid) {
  SupportFunction body = random_exact_ellipse(rng, grid);
  std::vector<CircleFunction> densities;
  for (int j = 0; j < m; ++j) densities.emplace_back(random_density(rng, j == m - 1));
  return TangentialData(std::move(body), std::move(densities));
}

}  // namespace tangent
