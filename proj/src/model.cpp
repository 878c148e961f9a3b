#include "thermoiso/model.hpp"

#include <cmath>
#include <stdexcept>

namespace thermoiso {

PhotoswitchParams::PhotoswitchParams(double e1_, double delta_e_, double p_, double lam_)
    : e1(e1_), delta_e(delta_e_), p(p_), lam(lam_) {
  if (!(e1 > 0.0) || !std::isfinite(e1)) {
    throw std::invalid_argument("photoexcitation energy E1 must be positive");
  }
  if (!(delta_e >= 0.0) || !std::isfinite(delta_e)) {
    throw std::invalid_argument("energy gap delta_e must be nonnegative");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("excitation probability p must lie in [0, 1]");
  }
  if (!(lam >= 0.0 && lam <= 0.5 * p + kEntryTol)) {
    throw std::invalid_argument("coherence lam must lie in [0, p/2]");
  }
}

EnergySpectrum single_molecule_model(double e1, double delta_e) {
  return EnergySpectrum({{"g", 0.0}, {"e", e1}, {"t", delta_e}});
}

EnergySpectrum two_molecule_model(double e1, double delta_e) {
  const double e_both = e1 + e1;
  const double e_mixed = e1 + delta_e;
  const double t_both = delta_e + delta_e;
  return EnergySpectrum({{"gg", 0.0},
                         {"ge", e1},
                         {"eg", e1},
                         {"ee", e_both},
                         {"gt", delta_e},
                         {"tg", delta_e},
                         {"et", e_mixed},
                         {"te", e_mixed},
                         {"tt", t_both}});
}

PopulationVector single_molecule_initial(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("excitation probability p must lie in [0, 1]");
  }
  return {1.0 - p, p, 0.0};
}

CoherentBlockState superposition_initial_state(const PhotoswitchParams& params) {
  PopulationVector diag(9, 0.0);
  diag[kGG] = 1.0 - params.p;
  diag[kGE] = 0.5 * params.p;
  diag[kEG] = 0.5 * params.p;
  return CoherentBlockState(two_molecule_model(params.e1, params.delta_e), std::move(diag),
                            {{kGE, kEG, params.lam}});
}

CoherentBlockState general_two_molecule_initial(double e1, double delta_e, double p_gg,
                                                double p_ge, double p_eg, double p_ee,
                                                std::complex<double> lam) {
  PopulationVector diag(9, 0.0);
  diag[kGG] = p_gg;
  diag[kGE] = p_ge;
  diag[kEG] = p_eg;
  diag[kEE] = p_ee;
  return CoherentBlockState(two_molecule_model(e1, delta_e), std::move(diag),
                            {{kGE, kEG, lam}});
}

std::vector<std::size_t> any_trans_subset() { return {kGT, kTG, kET, kTE, kTT}; }

std::vector<std::size_t> both_trans_subset() { return {kTT}; }

}  // namespace thermoiso
