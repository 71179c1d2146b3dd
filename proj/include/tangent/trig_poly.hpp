#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tangent/error.hpp"
#include "tangent/rational.hpp"

namespace tangent {

/// Trigonometric polynomial on the circle,
///
///   h(θ) = a_0 + Σ_{f=1}^{F} (a_f cos fθ + b_f sin fθ),
///
/// with coefficients in S (double or Rational). A function on S¹ is even in
/// ω = (cos θ, sin θ) exactly when only even frequencies occur.
template <class S>
class TrigPoly {
 public:
  TrigPoly() : cos_(1, S(0)), sin_(1, S(0)) {}

  /// `cos` holds a_0..a_F, `sin` holds b_1..b_F (shorter lists are zero padded).
  TrigPoly(std::vector<S> cos, std::vector<S> sin) {
    const std::size_t freq =
        std::max(cos.empty() ? std::size_t{0} : cos.size() - 1, sin.size());
    cos_.assign(freq + 1, S(0));
    sin_.assign(freq + 1, S(0));
    std::copy(cos.begin(), cos.end(), cos_.begin());
    std::copy(sin.begin(), sin.end(), sin_.begin() + 1);
  }

  static TrigPoly constant(const S& value) { return TrigPoly({value}, {}); }

  static TrigPoly cosine(int frequency, const S& amplitude) {
    TrigPoly out;
    out.add_cos(frequency, amplitude);
    return out;
  }

  static TrigPoly sine(int frequency, const S& amplitude) {
    TrigPoly out;
    out.add_sin(frequency, amplitude);
    return out;
  }

  int max_frequency() const { return static_cast<int>(cos_.size()) - 1; }

  S cos_coeff(int f) const {
    return (f >= 0 && f <= max_frequency()) ? cos_[f] : S(0);
  }
  S sin_coeff(int f) const {
    return (f >= 1 && f <= max_frequency()) ? sin_[f] : S(0);
  }

  double operator()(double theta) const {
    double sum = to_double(cos_[0]);
    for (int f = 1; f <= max_frequency(); ++f) {
      if (!is_zero(cos_[f])) sum += to_double(cos_[f]) * std::cos(f * theta);
      if (!is_zero(sin_[f])) sum += to_double(sin_[f]) * std::sin(f * theta);
    }
    return sum;
  }

  /// True when every odd-frequency coefficient is at most `rel_tol` times the
  /// largest coefficient (exactly zero by default).
  bool is_even(double rel_tol = 0.0) const {
    double scale = 0.0;
    for (int f = 0; f <= max_frequency(); ++f)
      scale = std::max({scale, magnitude(cos_[f]), magnitude(sin_[f])});
    for (int f = 1; f <= max_frequency(); f += 2) {
      if (rel_tol == 0.0) {
        if (!is_zero(cos_[f]) || !is_zero(sin_[f])) return false;
      } else if (std::max(magnitude(cos_[f]), magnitude(sin_[f])) > rel_tol * scale) {
        return false;
      }
    }
    return true;
  }

  bool is_zero_poly() const {
    for (int f = 0; f <= max_frequency(); ++f)
      if (!is_zero(cos_[f]) || !is_zero(sin_[f])) return false;
    return true;
  }

  /// Drops trailing zero frequencies.
  TrigPoly trimmed() const {
    int top = max_frequency();
    while (top > 0 && is_zero(cos_[top]) && is_zero(sin_[top])) --top;
    TrigPoly out = *this;
    out.cos_.resize(top + 1);
    out.sin_.resize(top + 1);
    return out;
  }

  TrigPoly& operator+=(const TrigPoly& other) {
    for (int f = 0; f <= other.max_frequency(); ++f) {
      add_cos(f, other.cos_[f]);
      if (f > 0) add_sin(f, other.sin_[f]);
    }
    return *this;
  }

  TrigPoly& operator*=(const S& scalar) {
    for (auto& c : cos_) c *= scalar;
    for (auto& s : sin_) s *= scalar;
    return *this;
  }

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) {
    TrigPoly neg = b;
    neg *= S(-1);
    return a += neg;
  }
  friend TrigPoly operator*(TrigPoly a, const S& s) { return a *= s; }
  friend TrigPoly operator*(const S& s, TrigPoly a) { return a *= s; }

  /// Product via the angle-addition formulas.
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out;
    const S half = S(1) / S(2);
    for (int f = 0; f <= a.max_frequency(); ++f) {
      for (int g = 0; g <= b.max_frequency(); ++g) {
        const S& ac = a.cos_[f];
        const S& as = a.sin_[f];
        const S& bc = b.cos_[g];
        const S& bs = b.sin_[g];
        if (!is_zero(ac) && !is_zero(bc)) {
          const S w = ac * bc * half;
          out.add_cos(f - g, w);
          out.add_cos(f + g, w);
        }
        if (!is_zero(as) && !is_zero(bs)) {
          const S w = as * bs * half;
          out.add_cos(f - g, w);
          out.add_cos(f + g, -w);
        }
        if (!is_zero(as) && !is_zero(bc)) {
          const S w = as * bc * half;
          out.add_sin(f + g, w);
          out.add_sin(f - g, w);
        }
        if (!is_zero(ac) && !is_zero(bs)) {
          const S w = ac * bs * half;
          out.add_sin(g + f, w);
          out.add_sin(g - f, w);
        }
      }
    }
    return out.trimmed();
  }

  TrigPoly pow(unsigned exponent) const {
    TrigPoly result = constant(S(1));
    TrigPoly base = *this;
    while (exponent > 0) {
      if (exponent & 1u) result = result * base;
      exponent >>= 1u;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    const int top = std::max(a.max_frequency(), b.max_frequency());
    for (int f = 0; f <= top; ++f)
      if (a.cos_coeff(f) != b.cos_coeff(f) || a.sin_coeff(f) != b.sin_coeff(f)) return false;
    return true;
  }

  /// Mean-square contribution of one frequency over the circle.
  S energy(int f) const {
    if (f == 0) return cos_coeff(0) * cos_coeff(0);
    return (cos_coeff(f) * cos_coeff(f) + sin_coeff(f) * sin_coeff(f)) / S(2);
  }

  TrigPoly<double> to_double_poly() const {
    std::vector<double> c(cos_.size()), s(sin_.size() - 1);
    for (std::size_t f = 0; f < cos_.size(); ++f) c[f] = to_double(cos_[f]);
    for (std::size_t f = 1; f < sin_.size(); ++f) s[f - 1] = to_double(sin_[f]);
    return TrigPoly<double>(std::move(c), std::move(s));
  }

 private:
  void grow(int f) {
    if (f > max_frequency()) {
      cos_.resize(f + 1, S(0));
      sin_.resize(f + 1, S(0));
    }
  }
  void add_cos(int f, const S& v) {
    f = f < 0 ? -f : f;
    grow(f);
    cos_[f] += v;
  }
  // sin(-f θ) = -sin(f θ); sin(0) = 0.
  void add_sin(int f, const S& v) {
    if (f == 0) return;
    if (f < 0) {
      grow(-f);
      sin_[-f] -= v;
    } else {
      grow(f);
      sin_[f] += v;
    }
  }

  std::vector<S> cos_;
  std::vector<S> sin_;  // sin_[0] is always zero
};

}  // namespace tangent
