#pragma once

#include <complex>
#include <utility>

#include "thermoiso/core.hpp"

namespace thermoiso {

/// Hermitian off-diagonal element connecting two degenerate levels i < j.
struct CoherentBlock {
  std::size_t i = 0;
  std::size_t j = 0;
  std::complex<double> lam;
};

/// Populations plus Hermitian 2x2 off-diagonal blocks inside degenerate
/// subspaces. Only the block elements within a degenerate subspace (the
/// 0-mode coherences) can influence populations under thermal operations,
/// so nothing else is stored.
///
/// Invariants enforced at construction:
///  - each block connects two distinct levels with exactly equal energy;
///  - each 2x2 submatrix [[p_i, lam], [conj(lam), p_j]] is positive
///    semidefinite: |lam|^2 <= p_i p_j within 1e-12;
///  - a level appears in at most one block.
class CoherentBlockState {
 public:
  CoherentBlockState(EnergySpectrum spectrum, PopulationVector diag,
                     std::vector<CoherentBlock> blocks);

  const EnergySpectrum& spectrum() const { return spectrum_; }
  const PopulationVector& diag() const { return diag_; }
  const std::vector<CoherentBlock>& blocks() const { return blocks_; }

 private:
  EnergySpectrum spectrum_;
  PopulationVector diag_;
  std::vector<CoherentBlock> blocks_;
};

/// Mixing angle and phase of the 2x2 unitary that diagonalized one block.
struct BlockRotation {
  std::size_t i = 0;
  std::size_t j = 0;
  double angle = 0.0;  // radians; 0 is the identity
  double phase = 0.0;  // radians; arg of the original off-diagonal
};

/// Per-block unitary parameters recorded by diagonalize_blocks, sufficient to
/// rotate optimizer output back to the original basis.
class BasisRotation {
 public:
  BasisRotation(EnergySpectrum spectrum, std::vector<BlockRotation> blocks)
      : spectrum_(std::move(spectrum)), blocks_(std::move(blocks)) {}

  const EnergySpectrum& spectrum() const { return spectrum_; }
  const std::vector<BlockRotation>& blocks() const { return blocks_; }

 private:
  EnergySpectrum spectrum_;
  std::vector<BlockRotation> blocks_;
};

/// Restricts a state to its 0-mode. Valid states only carry coherences
/// between exactly degenerate levels, so this is the identity on them;
/// it exists to make the mode selection explicit and is idempotent.
CoherentBlockState extract_zero_mode(const CoherentBlockState& state);

/// Diagonalizes every 2x2 block in closed form. Within a block holding
/// populations (p_i, p_j) and off-diagonal lam, the eigenvalues are
///
///   p+- = (p_i + p_j)/2 +- sqrt(((p_i - p_j)/2)^2 + |lam|^2)
///
/// with p+ assigned to the lower level index. Blocks with lam == 0 pass
/// through unchanged under the identity rotation. Per block, p+ + p- equals
/// p_i + p_j exactly (p- is formed by subtraction from the exact block sum).
std::pair<PopulationVector, BasisRotation> diagonalize_blocks(const CoherentBlockState& state);

/// Applies the recorded inverse rotation blockwise to a final diagonal state,
/// producing the final state in the original basis. Composing
/// diagonalize_blocks and rotate_back on its own output recovers the input
/// state to 1e-12. Throws std::invalid_argument on dimension mismatch.
CoherentBlockState rotate_back(const PopulationVector& final_diag, const BasisRotation& rot);

/// Tr(rho^2) restricted to the stored structure:
/// sum_k p_k^2 + 2 sum_blocks |lam|^2.
double purity(const CoherentBlockState& state);

}  // namespace thermoiso
