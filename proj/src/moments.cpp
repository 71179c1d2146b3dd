#include "tangent/moments.hpp"

#include "tangent/error.hpp"

namespace tangent {

BigInt c_table(int k, int j) {
  if (k < 0 || j < 0) throw InvalidParameter("coefficient indices must be nonnegative");
  if (j > k) return 0;
  BigInt out = 1;
  for (int i = 0; i < j; ++i) out *= k - i;
  return out;
}

CoefficientTable::CoefficientTable(int m, int K, const CoefficientFn& c) : m_(m), K_(K) {
  if (m < 1 || K < 0) throw InvalidParameter("coefficient table needs m >= 1 and K >= 0");
  rows_.resize(K + 1);
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j < m; ++j) rows_[k].push_back(c(2 * k, j));
}

namespace {

// ρ^e as an exact trigonometric polynomial, when one exists.
std::optional<TrigPoly<Rational>> exact_rho_power(const TrigPoly<Rational>& rho2, int e) {
  if (e % 2 == 0) return rho2.pow(static_cast<unsigned>(e / 2));
  if (rho2.trimmed().max_frequency() != 0) return std::nullopt;
  Rational root;
  if (!exact_sqrt(rho2.cos_coeff(0), root)) return std::nullopt;
  return TrigPoly<Rational>::constant(ipow(root, static_cast<unsigned>(e)));
}

std::optional<TrigPoly<Rational>> exact_moment(const TangentialData& data, int k) {
  if (k % 2 != 0) return TrigPoly<Rational>();
  const auto& rho2 = data.support().rho2_exact();
  if (!rho2) return std::nullopt;
  TrigPoly<Rational> sum;
  for (int j = 0; j <= std::min(k, data.m() - 1); ++j) {
    const auto& q = data.density(j).exact();
    if (!q) {
      if (data.density(j).trig() && data.density(j).trig()->is_zero_poly()) continue;
      return std::nullopt;
    }
    if (q->is_zero_poly()) continue;
    const auto power = exact_rho_power(*rho2, k - j);
    if (!power) return std::nullopt;
    Rational weight(c_table(k, j));
    if (j % 2 != 0) weight = -weight;
    sum += (*q * *power) * weight;
  }
  return sum * Rational(2);
}

}  // namespace

CircleFunction moment(const TangentialData& data, int k) {
  if (k < 0) throw InvalidParameter("moment order must be nonnegative");
  if (auto exact = exact_moment(data, k)) return CircleFunction(exact->trimmed());
  const int n = data.grid();
  return CircleFunction(
      SampledFunction::tabulate([&](double theta) { return moment_at(data.at(theta), k); }, n));
}

double moment_oracle(const TangentialData& data, int k, double theta) {
  return moment_oracle_at(data.at(theta), k);
}

}  // namespace tangent
