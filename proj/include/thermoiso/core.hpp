#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace thermoiso {

// Absolute tolerances used across the library. All arithmetic is double
// precision on small (<= 9 level) spectra, so these are loose enough to
// absorb accumulated rounding but far below any physical scale (~1e-2).
inline constexpr double kEntryTol = 1e-12;  // per-entry probability bounds
inline constexpr double kSumTol = 1e-9;     // normalization of probability sums
inline constexpr double kCurveTol = 1e-9;   // Lorenz curve comparisons

/// One energy eigenlevel. Energies are in eV throughout.
struct Level {
  std::string label;
  double energy = 0.0;
};

/// Labelled energy levels defining the Hamiltonian eigenbasis.
///
/// Degeneracy is permitted and detected by exact equality of the stored
/// energies; model builders are responsible for constructing intentionally
/// degenerate levels with bit-identical values.
class EnergySpectrum {
 public:
  explicit EnergySpectrum(std::vector<Level> levels);

  std::size_t size() const { return levels_.size(); }
  const Level& level(std::size_t j) const { return levels_[j]; }
  double energy(std::size_t j) const { return levels_[j].energy; }
  const std::vector<Level>& levels() const { return levels_; }

 private:
  std::vector<Level> levels_;
};

/// Inverse temperature beta = 1/kT in 1/eV.
struct ThermalContext {
  explicit ThermalContext(double beta_inv_ev);
  double beta;
};

// Diagonal occupation probabilities, one entry per spectrum level.
using PopulationVector = std::vector<double>;

/// Z = sum_j exp(-beta E_j). Strictly positive.
double partition_function(const EnergySpectrum& spectrum, const ThermalContext& ctx);

/// Thermal equilibrium distribution exp(-beta E_j)/Z.
PopulationVector gibbs_state(const EnergySpectrum& spectrum, const ThermalContext& ctx);

/// Checks length, entry bounds and normalization of `v` against `spectrum`.
/// Returns std::nullopt when valid, otherwise a description of the first
/// violation found. Never throws.
std::optional<std::string> validate_population(const PopulationVector& v,
                                               const EnergySpectrum& spectrum);

}  // namespace thermoiso
