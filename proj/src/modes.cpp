#include "thermoiso/modes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace thermoiso {

CoherentBlockState::CoherentBlockState(EnergySpectrum spectrum, PopulationVector diag,
                                       std::vector<CoherentBlock> blocks)
    : spectrum_(std::move(spectrum)), diag_(std::move(diag)), blocks_(std::move(blocks)) {
  if (auto violation = validate_population(diag_, spectrum_)) {
    throw std::invalid_argument("invalid diagonal: " + *violation);
  }
  std::vector<bool> used(spectrum_.size(), false);
  for (CoherentBlock& b : blocks_) {
    if (b.i >= spectrum_.size() || b.j >= spectrum_.size() || b.i == b.j) {
      std::ostringstream msg;
      msg << "block (" << b.i << ", " << b.j << ") does not reference two distinct levels";
      throw std::invalid_argument(msg.str());
    }
    if (b.i > b.j) {
      std::swap(b.i, b.j);
      b.lam = std::conj(b.lam);
    }
    if (spectrum_.energy(b.i) != spectrum_.energy(b.j)) {
      std::ostringstream msg;
      msg << "block (" << spectrum_.level(b.i).label << ", " << spectrum_.level(b.j).label
          << ") connects non-degenerate levels; only 0-mode coherences are representable";
      throw std::invalid_argument(msg.str());
    }
    if (used[b.i] || used[b.j]) {
      throw std::invalid_argument("a level appears in more than one coherent block");
    }
    used[b.i] = used[b.j] = true;
    const double bound = diag_[b.i] * diag_[b.j];
    if (std::norm(b.lam) > bound + kEntryTol) {
      std::ostringstream msg;
      msg << "block (" << spectrum_.level(b.i).label << ", " << spectrum_.level(b.j).label
          << ") violates positivity: |lam|^2 = " << std::norm(b.lam) << " > p_i p_j = " << bound;
      throw std::invalid_argument(msg.str());
    }
  }
}

CoherentBlockState extract_zero_mode(const CoherentBlockState& state) {
  // Stored blocks connect degenerate levels by construction, so every block
  // already belongs to the 0-mode.
  return state;
}

std::pair<PopulationVector, BasisRotation> diagonalize_blocks(const CoherentBlockState& state) {
  PopulationVector diag = state.diag();
  std::vector<BlockRotation> rotations;
  rotations.reserve(state.blocks().size());
  for (const CoherentBlock& b : state.blocks()) {
    const double mag = std::abs(b.lam);
    if (mag == 0.0) {
      rotations.push_back({b.i, b.j, 0.0, 0.0});
      continue;
    }
    const double sum = diag[b.i] + diag[b.j];
    const double half_gap = 0.5 * (diag[b.i] - diag[b.j]);
    const double radius = std::hypot(half_gap, mag);
    const double p_plus = 0.5 * sum + radius;
    // Subtracting from the block sum keeps p+ + p- exact; Sterbenz applies
    // because sum/2 <= p+ <= sum up to the positivity tolerance.
    const double p_minus = sum - p_plus;
    diag[b.i] = p_plus;
    diag[b.j] = p_minus;
    rotations.push_back({b.i, b.j, std::atan2(radius - half_gap, mag), std::arg(b.lam)});
  }
  return {std::move(diag), BasisRotation(state.spectrum(), std::move(rotations))};
}

CoherentBlockState rotate_back(const PopulationVector& final_diag, const BasisRotation& rot) {
  if (final_diag.size() != rot.spectrum().size()) {
    std::ostringstream msg;
    msg << "dimension mismatch: " << final_diag.size() << " probabilities for "
        << rot.spectrum().size() << "-level rotation";
    throw std::invalid_argument(msg.str());
  }
  PopulationVector diag = final_diag;
  std::vector<CoherentBlock> blocks;
  for (const BlockRotation& r : rot.blocks()) {
    const double c = std::cos(r.angle);
    const double s = std::sin(r.angle);
    const double d_plus = diag[r.i];
    const double d_minus = diag[r.j];
    // sigma = U^dagger diag(d+, d-) U for U = [[c, s e^{i phi}], [-s, c e^{i phi}]].
    const double off = c * s * (d_plus - d_minus);
    diag[r.i] = c * c * d_plus + s * s * d_minus;
    diag[r.j] = s * s * d_plus + c * c * d_minus;
    if (off != 0.0) {
      blocks.push_back({r.i, r.j, off * std::complex<double>(std::cos(r.phase), std::sin(r.phase))});
    }
  }
  return CoherentBlockState(rot.spectrum(), std::move(diag), std::move(blocks));
}

double purity(const CoherentBlockState& state) {
  double sum = 0.0;
  for (double p : state.diag()) sum += p * p;
  for (const CoherentBlock& b : state.blocks()) sum += 2.0 * std::norm(b.lam);
  return sum;
}

}  // namespace thermoiso
