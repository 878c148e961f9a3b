#pragma once

#include "thermoiso/modes.hpp"

namespace thermoiso {

/// Photoswitch model parameters: photoexcitation energy E1 and cis->trans gap
/// delta_e in eV, excitation probability p and coherence magnitude lam
/// (bounded by p/2 in the symmetric superposition state).
struct PhotoswitchParams {
  PhotoswitchParams(double e1, double delta_e, double p, double lam);
  double e1;
  double delta_e;
  double p;
  double lam;
};

// Canonical level order of the two-molecule spectrum. All serialization and
// subset definitions depend on it.
inline constexpr std::size_t kGG = 0, kGE = 1, kEG = 2, kEE = 3, kGT = 4, kTG = 5, kET = 6,
                             kTE = 7, kTT = 8;

/// 3-level single-molecule spectrum: cis ground g at 0, cis excited e at E1,
/// trans ground t at delta_e.
EnergySpectrum single_molecule_model(double e1, double delta_e);

/// 9-level spectrum of two identical molecules under the sum of local
/// Hamiltonians, in canonical order (gg, ge, eg, ee, gt, tg, et, te, tt).
/// Degenerate pairs carry bit-identical energies.
EnergySpectrum two_molecule_model(double e1, double delta_e);

/// Post-absorption mixture (1-p, p, 0) on the 3-level spectrum.
PopulationVector single_molecule_initial(double p);

/// Single photon shared between both molecules: diagonal
/// (1-p, p/2, p/2, 0, ..., 0) plus one coherent block of magnitude lam on the
/// degenerate (ge, eg) pair. Diagonalizing yields
/// (1-p, p/2 + lam, p/2 - lam, 0, ..., 0).
CoherentBlockState superposition_initial_state(const PhotoswitchParams& params);

/// General cis-subspace initial state (p_gg, p_ge, p_eg, p_ee, 0, ..., 0)
/// with one complex coherence lam on (ge, eg); requires normalization and
/// |lam|^2 <= p_ge p_eg.
CoherentBlockState general_two_molecule_initial(double e1, double delta_e, double p_gg,
                                                double p_ge, double p_eg, double p_ee,
                                                std::complex<double> lam);

/// Level indices counting "at least one molecule in trans": gt, tg, et, te, tt.
std::vector<std::size_t> any_trans_subset();

/// Level index set {tt}: both molecules in trans.
std::vector<std::size_t> both_trans_subset();

}  // namespace thermoiso
