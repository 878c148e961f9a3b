#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "thermoiso/model.hpp"
#include "thermoiso/modes.hpp"

using namespace thermoiso;

namespace {

// Random valid two-molecule state with one coherent block on (ge, eg).
CoherentBlockState random_block_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double w[4] = {unit(rng) + 1e-3, unit(rng) + 1e-3, unit(rng) + 1e-3, unit(rng) + 1e-3};
  const double sum = w[0] + w[1] + w[2] + w[3];
  for (double& x : w) x /= sum;
  const double bound = std::sqrt(w[1] * w[2]);
  const double mag = bound * unit(rng);
  const double phase = 2.0 * M_PI * unit(rng);
  return general_two_molecule_initial(2.48, 1.39, w[0], w[1], w[2], w[3],
                                      std::polar(mag, phase));
}

}  // namespace

TEST_CASE("block construction enforces degeneracy, disjointness and positivity") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);
  PopulationVector diag = {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0};

  CHECK_NOTHROW(CoherentBlockState(spectrum, diag, {{kGE, kEG, 0.2}}));
  // ge and gt are not degenerate
  CHECK_THROWS_AS(CoherentBlockState(spectrum, diag, {{kGE, kGT, 0.1}}), std::invalid_argument);
  // |lam|^2 > p_i p_j
  CHECK_THROWS_AS(CoherentBlockState(spectrum, diag, {{kGE, kEG, 0.36}}), std::invalid_argument);
  // same level twice
  CHECK_THROWS_AS(CoherentBlockState(spectrum, diag, {{kGE, kGE, 0.1}}), std::invalid_argument);
  // overlapping blocks on the degenerate trans pair
  PopulationVector spread = {0.2, 0.2, 0.2, 0, 0.2, 0.2, 0, 0, 0};
  CHECK_THROWS_AS(
      CoherentBlockState(spectrum, spread, {{kGT, kTG, 0.1}, {kTG, kGT, 0.05}}),
      std::invalid_argument);
}

TEST_CASE("extract_zero_mode is the identity on valid states") {
  std::mt19937 rng(5);
  const CoherentBlockState state = random_block_state(rng);
  const CoherentBlockState zero = extract_zero_mode(state);
  CHECK(zero.diag() == state.diag());
  REQUIRE(zero.blocks().size() == state.blocks().size());
  CHECK(zero.blocks()[0].lam == state.blocks()[0].lam);
  const CoherentBlockState again = extract_zero_mode(zero);
  CHECK(again.diag() == zero.diag());
}

TEST_CASE("symmetric block eigenvalues are p/2 +- lam") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);
  const CoherentBlockState state(spectrum, {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0},
                                 {{kGE, kEG, 0.2}});
  const auto [diag, rotation] = diagonalize_blocks(state);
  CHECK(diag[kGE] == doctest::Approx(0.55).epsilon(1e-14));
  CHECK(diag[kEG] == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(diag[kGG] == 0.3);
}

TEST_CASE("lam = 0 leaves the block untouched under the identity rotation") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);

  const CoherentBlockState symmetric(spectrum, {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0},
                                     {{kGE, kEG, 0.0}});
  auto [diag, rotation] = diagonalize_blocks(symmetric);
  CHECK(diag[kGE] == 0.35);
  CHECK(diag[kEG] == 0.35);
  CHECK(rotation.blocks()[0].angle == 0.0);

  const CoherentBlockState tilted(spectrum, {0.3, 0.37, 0.33, 0, 0, 0, 0, 0, 0},
                                  {{kGE, kEG, 0.0}});
  auto [diag2, rotation2] = diagonalize_blocks(tilted);
  CHECK(diag2[kGE] == 0.37);
  CHECK(diag2[kEG] == 0.33);
  CHECK(rotation2.blocks()[0].angle == 0.0);
}

TEST_CASE("diagonalization conserves trace and block mass exactly") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const CoherentBlockState state = random_block_state(rng);
    const auto [diag, rotation] = diagonalize_blocks(state);

    // per-block conservation is exact by construction
    CHECK(diag[kGE] + diag[kEG] == state.diag()[kGE] + state.diag()[kEG]);

    double before = 0.0, after = 0.0;
    for (double x : state.diag()) before += x;
    for (double x : diag) after += x;
    CHECK(after == doctest::Approx(before).epsilon(1e-13));

    // eigenvalue dominance, strict when lam != 0
    const double hi = std::max(state.diag()[kGE], state.diag()[kEG]);
    const double lo = std::min(state.diag()[kGE], state.diag()[kEG]);
    CHECK(diag[kGE] >= hi - 1e-15);
    CHECK(diag[kEG] <= lo + 1e-15);
    // strictness needs lam well above fp noise: the perturbation scales as
    // lam^2 / gap and must clear one ulp of the populations
    if (std::abs(state.blocks()[0].lam) > 1e-6) {
      CHECK(diag[kGE] > hi);
      CHECK(diag[kEG] < lo);
    }
  }
}

TEST_CASE("p_plus grows monotonically with |lam| at fixed diagonal") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);
  double prev = -1.0;
  for (double lam = 0.0; lam <= 0.3501; lam += 0.05) {
    const CoherentBlockState state(spectrum, {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0},
                                   {{kGE, kEG, lam}});
    const auto [diag, rotation] = diagonalize_blocks(state);
    CHECK(diag[kGE] > prev);
    prev = diag[kGE];
  }
}

TEST_CASE("only |lam| matters, not its phase") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);
  const PopulationVector diag = {0.25, 0.4, 0.3, 0.05, 0, 0, 0, 0, 0};
  const auto [real_diag, r1] =
      diagonalize_blocks(CoherentBlockState(spectrum, diag, {{kGE, kEG, 0.2}}));
  const auto [rotated_diag, r2] = diagonalize_blocks(
      CoherentBlockState(spectrum, diag, {{kGE, kEG, std::polar(0.2, 2.1)}}));
  CHECK(real_diag[kGE] == doctest::Approx(rotated_diag[kGE]).epsilon(1e-15));
  CHECK(real_diag[kEG] == doctest::Approx(rotated_diag[kEG]).epsilon(1e-15));
}

TEST_CASE("diagonalize then rotate back recovers the state") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const CoherentBlockState state = random_block_state(rng);
    const auto [diag, rotation] = diagonalize_blocks(state);
    const CoherentBlockState back = rotate_back(diag, rotation);

    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(back.diag()[j] == doctest::Approx(state.diag()[j]).epsilon(1e-12));
    }
    const std::complex<double> lam_in = state.blocks()[0].lam;
    if (std::abs(lam_in) > 1e-6) {
      REQUIRE(back.blocks().size() == 1);
      CHECK(std::abs(back.blocks()[0].lam - lam_in) < 1e-12);
    }
  }
}

TEST_CASE("identity rotation returns the diagonal unchanged") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);
  const CoherentBlockState state(spectrum, {0.3, 0.37, 0.33, 0, 0, 0, 0, 0, 0},
                                 {{kGE, kEG, 0.0}});
  const auto [diag, rotation] = diagonalize_blocks(state);
  const PopulationVector final_diag = {0.1, 0.2, 0.3, 0.4, 0, 0, 0, 0, 0};
  const CoherentBlockState back = rotate_back(final_diag, rotation);
  CHECK(back.diag() == final_diag);
  CHECK(back.blocks().empty());
}

TEST_CASE("equal diagonal entries rotate back without coherence") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);
  const CoherentBlockState state(spectrum, {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0},
                                 {{kGE, kEG, 0.2}});
  const auto [diag, rotation] = diagonalize_blocks(state);
  PopulationVector final_diag(9, 0.0);
  final_diag[kGE] = 0.25;
  final_diag[kEG] = 0.25;
  final_diag[kGG] = 0.5;
  const CoherentBlockState back = rotate_back(final_diag, rotation);
  CHECK(back.blocks().empty());
  CHECK(back.diag()[kGE] == doctest::Approx(0.25));
  CHECK(back.diag()[kEG] == doctest::Approx(0.25));
}

TEST_CASE("rotate_back rejects mismatched dimensions") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);
  const CoherentBlockState state(spectrum, {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0},
                                 {{kGE, kEG, 0.1}});
  const auto [diag, rotation] = diagonalize_blocks(state);
  CHECK_THROWS_AS(rotate_back({0.5, 0.5}, rotation), std::invalid_argument);
}

TEST_CASE("purity formula and monotonicity in |lam|") {
  const EnergySpectrum spectrum = two_molecule_model(2.48, 1.39);

  // pure 2x2 block: p = (0.5, 0.5), lam = 0.5
  const CoherentBlockState pure(spectrum, {0.0, 0.5, 0.5, 0, 0, 0, 0, 0, 0},
                                {{kGE, kEG, 0.5}});
  CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-14));

  const CoherentBlockState mixed(spectrum, {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0},
                                 {{kGE, kEG, 0.0}});
  CHECK(purity(mixed) == doctest::Approx(0.335).epsilon(1e-14));

  double prev = 0.0;
  for (double lam = 0.0; lam <= 0.3501; lam += 0.05) {
    const CoherentBlockState state(spectrum, {0.3, 0.35, 0.35, 0, 0, 0, 0, 0, 0},
                                   {{kGE, kEG, lam}});
    const double tr2 = purity(state);
    CHECK(tr2 >= prev);
    CHECK(tr2 <= 1.0 + 1e-12);
    prev = tr2;
  }
}
