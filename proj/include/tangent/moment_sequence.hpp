#pragma once

#include <memory>
#include <vector>

#include "tangent/circle_function.hpp"
#include "tangent/geometry.hpp"

namespace tangent {

/// Even moments p_0, p_2, ..., p_{2K} as functions on S¹, indexed by half
/// order k. Synthetic sequences keep their generating data so they can be
/// evaluated exactly at any direction.
class MomentSequence {
 public:
  enum class Source { synthetic, external };

  /// External moments, each p_{2k} even; evaluated on an n-point grid.
  MomentSequence(std::vector<CircleFunction> half_orders, int grid);

  /// Moments generated from `data`; `half_orders` must be those moments.
  MomentSequence(std::shared_ptr<const TangentialData> data,
                 std::vector<CircleFunction> half_orders);

  Source source() const { return data_ ? Source::synthetic : Source::external; }
  int K() const { return static_cast<int>(half_orders_.size()) - 1; }
  int grid() const { return grid_; }
  const CircleFunction& operator[](int k) const { return half_orders_.at(k); }
  const TangentialData* generator() const { return data_.get(); }

  double value(int k, double theta) const;
  /// p_0, p_2, ..., p_{2(count−1)} at theta.
  std::vector<double> values_at(double theta, int count) const;
  /// Exact values from the generating data at the rationalized point sample.
  /// Throws InvalidParameter for external sequences.
  std::vector<Rational> exact_values_at(double theta, int count) const;

 private:
  std::shared_ptr<const TangentialData> data_;
  std::vector<CircleFunction> half_orders_;
  int grid_;
};

}  // namespace tangent
