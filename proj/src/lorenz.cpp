#include "thermoiso/lorenz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace thermoiso {

LorenzCurve build_curve(const PopulationVector& v, const EnergySpectrum& spectrum,
                        const ThermalContext& ctx) {
  if (auto violation = validate_population(v, spectrum)) {
    throw std::invalid_argument("invalid population: " + *violation);
  }
  const std::size_t d = spectrum.size();

  // Rescaled sort keys p_j exp(beta E_j), computed relative to the largest
  // energy so that the exponentials stay bounded by 1. A common rescale
  // factor does not change the ordering.
  double e_max = spectrum.energy(0);
  for (std::size_t j = 1; j < d; ++j) e_max = std::max(e_max, spectrum.energy(j));
  std::vector<double> key(d);
  for (std::size_t j = 0; j < d; ++j) {
    key[j] = v[j] * std::exp(ctx.beta * (spectrum.energy(j) - e_max));
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return spectrum.energy(a) < spectrum.energy(b);
  });

  LorenzCurve curve;
  curve.beta = ctx.beta;
  curve.xs.reserve(d + 1);
  curve.ys.reserve(d + 1);
  curve.xs.push_back(0.0);
  curve.ys.push_back(0.0);
  double x = 0.0, y = 0.0;
  for (std::size_t j : order) {
    x += std::exp(-ctx.beta * spectrum.energy(j));
    y += v[j];
    curve.xs.push_back(x);
    curve.ys.push_back(y);
  }
  return curve;
}

double evaluate(const LorenzCurve& curve, double x) {
  const double z = curve.z();
  if (!std::isfinite(x) || x < -kEntryTol || x > z + kCurveTol) {
    throw std::domain_error("Lorenz curve evaluated outside [0, Z]");
  }
  if (x <= 0.0) return 0.0;
  if (x >= z) return curve.ys.back();
  const auto it = std::upper_bound(curve.xs.begin(), curve.xs.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - curve.xs.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - curve.xs[lo]) / (curve.xs[hi] - curve.xs[lo]);
  return curve.ys[lo] + t * (curve.ys[hi] - curve.ys[lo]);
}

namespace {

// Evaluation with the flat y = 1 extension past the curve's own Z, used when
// comparing curves whose spectra (and hence partition functions) differ.
double value_at(const LorenzCurve& curve, double x) {
  if (x >= curve.z()) return 1.0;
  return evaluate(curve, x);
}

}  // namespace

bool thermomajorizes(const LorenzCurve& p_curve, const LorenzCurve& q_curve) {
  if (p_curve.beta != q_curve.beta) {
    throw std::invalid_argument("cannot compare Lorenz curves built at different beta");
  }
  // Both curves are concave and piecewise linear, so pointwise dominance over
  // the union of knot x-values implies dominance everywhere.
  for (double x : p_curve.xs) {
    if (value_at(p_curve, x) < value_at(q_curve, x) - kCurveTol) return false;
  }
  for (double x : q_curve.xs) {
    if (value_at(p_curve, x) < value_at(q_curve, x) - kCurveTol) return false;
  }
  return true;
}

}  // namespace thermoiso
