#include <doctest.h>

#include <cmath>
#include <random>

#include "thermoiso/core.hpp"
#include "thermoiso/model.hpp"

using namespace thermoiso;

TEST_CASE("partition function of a single zero level is 1") {
  const EnergySpectrum spectrum({{"g", 0.0}});
  CHECK(partition_function(spectrum, ThermalContext(1.0)) == doctest::Approx(1.0));
  CHECK(partition_function(spectrum, ThermalContext(37.5)) == doctest::Approx(1.0));
}

TEST_CASE("partition function by direct summation on the rhodopsin spectra") {
  const ThermalContext ctx(1.0);
  // sum_j exp(-E_j) computed independently: 1 + e^-2.48 + e^-1.39
  CHECK(partition_function(single_molecule_model(2.48, 1.39), ctx) ==
        doctest::Approx(1.3328185302238642).epsilon(1e-12));
  CHECK(partition_function(two_molecule_model(2.48, 1.39), ctx) ==
        doctest::Approx(1.7764052345081016).epsilon(1e-12));
}

TEST_CASE("gibbs state values and normalization") {
  const ThermalContext ctx(1.0);

  SUBCASE("single level") {
    const PopulationVector g = gibbs_state(EnergySpectrum({{"a", 0.0}}), ctx);
    CHECK(g.size() == 1);
    CHECK(g[0] == doctest::Approx(1.0));
  }

  SUBCASE("two degenerate levels split evenly") {
    const PopulationVector g = gibbs_state(EnergySpectrum({{"a", 0.0}, {"b", 0.0}}), ctx);
    CHECK(g[0] == doctest::Approx(0.5));
    CHECK(g[1] == doctest::Approx(0.5));
  }

  SUBCASE("rhodopsin 3-level values") {
    const PopulationVector g = gibbs_state(single_molecule_model(2.48, 1.39), ctx);
    CHECK(g[0] == doctest::Approx(0.7502896885985199).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(0.0628316786518043).epsilon(1e-12));
    CHECK(g[2] == doctest::Approx(0.1868786327496758).epsilon(1e-12));
  }
}

TEST_CASE("gibbs state always validates and matches the partition function") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> energy(-2.0, 5.0);
  std::uniform_real_distribution<double> beta(0.2, 3.0);
  std::uniform_int_distribution<int> dim(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Level> levels;
    const int d = dim(rng);
    for (int j = 0; j < d; ++j) levels.push_back({"l" + std::to_string(j), energy(rng)});
    const EnergySpectrum spectrum(levels);
    const ThermalContext ctx(beta(rng));
    const PopulationVector g = gibbs_state(spectrum, ctx);
    CHECK_FALSE(validate_population(g, spectrum).has_value());
    double numerators = 0.0;
    for (const Level& lv : levels) numerators += std::exp(-ctx.beta * lv.energy);
    CHECK(numerators == doctest::Approx(partition_function(spectrum, ctx)).epsilon(1e-13));
  }
}

TEST_CASE("gibbs state is invariant under a uniform energy shift") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> energy(0.0, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Level> base, shifted;
    const double shift = energy(rng) - 2.0;
    for (int j = 0; j < 5; ++j) {
      const double e = energy(rng);
      base.push_back({"l" + std::to_string(j), e});
      shifted.push_back({"l" + std::to_string(j), e + shift});
    }
    const ThermalContext ctx(1.3);
    const PopulationVector a = gibbs_state(EnergySpectrum(base), ctx);
    const PopulationVector b = gibbs_state(EnergySpectrum(shifted), ctx);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-12));
  }
}

TEST_CASE("partition function decreases with beta when all energies are positive") {
  const EnergySpectrum spectrum({{"a", 0.3}, {"b", 1.1}, {"c", 2.9}});
  double prev = partition_function(spectrum, ThermalContext(0.1));
  for (double beta = 0.3; beta < 4.0; beta += 0.2) {
    const double z = partition_function(spectrum, ThermalContext(beta));
    CHECK(z < prev);
    prev = z;
  }
}

TEST_CASE("validate_population reports the first violation") {
  const EnergySpectrum three = single_molecule_model(2.48, 1.39);
  const EnergySpectrum two({{"a", 0.0}, {"b", 1.0}});

  CHECK_FALSE(validate_population({0.3, 0.7, 0.0}, three).has_value());

  const auto sum_violation = validate_population({0.5, 0.6}, two);
  REQUIRE(sum_violation.has_value());
  CHECK(sum_violation->find("sum") != std::string::npos);

  const auto length_violation = validate_population({0.5, 0.5, 0.0}, two);
  REQUIRE(length_violation.has_value());
  CHECK(length_violation->find("length") != std::string::npos);

  const auto negative = validate_population({-0.2, 1.2}, two);
  REQUIRE(negative.has_value());
  CHECK(negative->find("outside") != std::string::npos);
}

TEST_CASE("spectrum and context constructors reject invalid input") {
  CHECK_THROWS_AS(EnergySpectrum({}), std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({{"a", 0.0}, {"a", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({{"a", std::nan("")}}), std::invalid_argument);
  CHECK_THROWS_AS(ThermalContext(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ThermalContext(-1.0), std::invalid_argument);
}
