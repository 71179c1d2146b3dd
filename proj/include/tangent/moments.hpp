#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tangent/circle_function.hpp"
#include "tangent/geometry.hpp"
#include "tangent/rational.hpp"

namespace tangent {

/// c_{k,j} = k (k−1) ⋯ (k−j+1), with c_{k,0} = 1 and c_{k,j} = 0 for j > k.
BigInt c_table(int k, int j);

/// Signature of a coefficient table; lets checks run against a substitute.
using CoefficientFn = std::function<BigInt(int, int)>;

/// Rows c_{2k,j} for k = 0..K and j = 0..m−1.
class CoefficientTable {
 public:
  CoefficientTable(int m, int K, const CoefficientFn& c = c_table);
  int m() const { return m_; }
  int K() const { return K_; }
  const BigInt& operator()(int k, int j) const { return rows_.at(k).at(j); }

 private:
  int m_;
  int K_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Closed form ∫ g p^k dp = 2 Σ_j c_{k,j} (−1)^j q_j ρ^{k−j} for even k, 0 for odd k.
template <class S>
S moment_at(const PointSample<S>& point, int k) {
  if (k < 0) throw InvalidParameter("moment order must be nonnegative");
  if (k % 2 != 0) return S(0);
  S sum(0);
  const int top = std::min<int>(k, static_cast<int>(point.q.size()) - 1);
  for (int j = 0; j <= top; ++j) {
    if (is_zero(point.q[j])) continue;
    S term = from_bigint<S>(c_table(k, j)) * point.q[j] * ipow(point.rho, static_cast<unsigned>(k - j));
    if (j % 2 != 0) term = -term;
    sum += term;
  }
  return S(2) * sum;
}

/// Brute-force pairing: expands g into its 2m delta terms and pairs each
/// δ^(j)(p − a) with p^k by differentiating the monomial j times,
/// ⟨δ^(j)(p − a), φ⟩ = (−1)^j φ^(j)(a). Independent of c_table.
template <class S>
S moment_oracle_at(const PointSample<S>& point, int k) {
  if (k < 0) throw InvalidParameter("moment order must be nonnegative");
  S total(0);
  for (std::size_t j = 0; j < point.q.size(); ++j) {
    // coefficients of d^j/dp^j p^k, lowest degree first
    std::vector<S> poly(k + 1, S(0));
    poly[k] = S(1);
    for (std::size_t d = 0; d < j; ++d) {
      std::vector<S> next(poly.size(), S(0));
      for (std::size_t e = 1; e < poly.size(); ++e) next[e - 1] = poly[e] * S(static_cast<long>(e));
      poly = std::move(next);
    }
    auto horner = [&](const S& a) {
      S acc(0);
      for (std::size_t e = poly.size(); e-- > 0;) acc = acc * a + poly[e];
      return acc;
    };
    const S sign = (j % 2 == 0) ? S(1) : S(-1);
    // q_j δ^(j)(p − ρ)  and  (−1)^j q_j δ^(j)(p + ρ)
    const S at_plus = sign * horner(point.rho);
    const S at_minus = sign * horner(S(-point.rho));
    total += point.q[j] * (at_plus + sign * at_minus);
  }
  return total;
}

/// The moment as a function on S¹, sampled on the data grid. When ρ² and
/// every contributing density are exact and only even powers of ρ occur (or
/// ρ is a rational constant) the exact trigonometric polynomial is attached.
CircleFunction moment(const TangentialData& data, int k);

/// moment_oracle_at evaluated at one direction, in floating point.
double moment_oracle(const TangentialData& data, int k, double theta);

}  // namespace tangent
