#include "thermoiso/core.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thermoiso {

EnergySpectrum::EnergySpectrum(std::vector<Level> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) {
    throw std::invalid_argument("spectrum needs at least one level");
  }
  std::set<std::string> seen;
  for (const Level& lv : levels_) {
    if (!std::isfinite(lv.energy)) {
      throw std::invalid_argument("level '" + lv.label + "' has non-finite energy");
    }
    if (!seen.insert(lv.label).second) {
      throw std::invalid_argument("duplicate level label '" + lv.label + "'");
    }
  }
}

ThermalContext::ThermalContext(double beta_inv_ev) : beta(beta_inv_ev) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("inverse temperature must be positive and finite");
  }
}

double partition_function(const EnergySpectrum& spectrum, const ThermalContext& ctx) {
  double z = 0.0;
  for (const Level& lv : spectrum.levels()) z += std::exp(-ctx.beta * lv.energy);
  return z;
}

PopulationVector gibbs_state(const EnergySpectrum& spectrum, const ThermalContext& ctx) {
  const double z = partition_function(spectrum, ctx);
  PopulationVector probs;
  probs.reserve(spectrum.size());
  for (const Level& lv : spectrum.levels()) probs.push_back(std::exp(-ctx.beta * lv.energy) / z);
  return probs;
}

std::optional<std::string> validate_population(const PopulationVector& v,
                                               const EnergySpectrum& spectrum) {
  if (v.size() != spectrum.size()) {
    std::ostringstream msg;
    msg << "length mismatch: " << v.size() << " probabilities for " << spectrum.size()
        << " levels";
    return msg.str();
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!std::isfinite(v[j]) || v[j] < -kEntryTol || v[j] > 1.0 + kEntryTol) {
      std::ostringstream msg;
      msg << "entry " << j << " (" << spectrum.level(j).label << ") = " << v[j]
          << " outside [0, 1]";
      return msg.str();
    }
    sum += v[j];
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum << ", expected 1";
    return msg.str();
  }
  return std::nullopt;
}

}  // namespace thermoiso
