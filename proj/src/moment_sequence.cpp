#include "tangent/moment_sequence.hpp"

#include <limits>
#include <string>

#include "tangent/error.hpp"
#include "tangent/moments.hpp"

namespace tangent {

namespace {

bool is_even_function(const CircleFunction& h, int grid) {
  if (h.exact()) return h.exact()->is_even();
  if (h.trig()) return h.trig()->is_even(1e-12);
  const double tol = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, h.max_abs(grid));
  return h.evenness_defect(grid) <= tol;
}

}  // namespace

MomentSequence::MomentSequence(std::vector<CircleFunction> half_orders, int grid)
    : half_orders_(std::move(half_orders)), grid_(grid) {
  if (half_orders_.empty()) throw InvalidParameter("moment sequence needs at least p_0");
  if (grid_ < 4 || grid_ % 2 != 0) throw InvalidParameter("grid size must be even and at least 4");
  for (std::size_t k = 0; k < half_orders_.size(); ++k) {
    const auto& h = half_orders_[k];
    if (h.sampled() && h.sampled()->size() != grid_)
      throw InvalidParameter("p_" + std::to_string(2 * k) + " is sampled on a different grid");
    if (!is_even_function(h, grid_))
      throw InvalidParameter("p_" + std::to_string(2 * k) + " is not even (period pi)");
  }
}

MomentSequence::MomentSequence(std::shared_ptr<const TangentialData> data,
                               std::vector<CircleFunction> half_orders)
    : data_(std::move(data)), half_orders_(std::move(half_orders)) {
  if (!data_) throw InvalidParameter("synthetic moment sequence needs its data");
  if (half_orders_.empty()) throw InvalidParameter("moment sequence needs at least p_0");
  grid_ = data_->grid();
}

double MomentSequence::value(int k, double theta) const {
  if (k < 0 || k > K())
    throw InvalidParameter("moment p_" + std::to_string(2 * k) + " is not available");
  return half_orders_[k](theta);
}

std::vector<double> MomentSequence::values_at(double theta, int count) const {
  if (count > K() + 1)
    throw InvalidParameter("need moments through p_" + std::to_string(2 * (count - 1)) +
                           ", have through p_" + std::to_string(2 * K()));
  std::vector<double> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(half_orders_[k](theta));
  return out;
}

std::vector<Rational> MomentSequence::exact_values_at(double theta, int count) const {
  if (!data_) throw InvalidParameter("exact moment values need a synthetic sequence");
  if (count > K() + 1)
    throw InvalidParameter("need moments through p_" + std::to_string(2 * (count - 1)) +
                           ", have through p_" + std::to_string(2 * K()));
  const auto point = data_->exact_at(theta);
  std::vector<Rational> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(moment_at(point, 2 * k) / Rational(2));
  return out;
}

}  // namespace tangent
