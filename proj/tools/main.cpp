// Command-line entry point: builds Lorenz curves, decides thermomajorization,
// computes optimal quantum yields and runs the parameter sweeps. Identical
// invocations produce byte-identical output.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "thermoiso/io.hpp"
#include "thermoiso/lorenz.hpp"
#include "thermoiso/model.hpp"
#include "thermoiso/modes.hpp"
#include "thermoiso/sweep.hpp"
#include "thermoiso/yield.hpp"

namespace {

using namespace thermoiso;

struct SharedOptions {
  double e1 = 2.48;
  double delta_e = 1.39;
  double beta = 1.0;
  std::string out;
};

void add_shared(CLI::App* cmd, SharedOptions& shared) {
  cmd->add_option("--e1", shared.e1, "Photoexcitation energy in eV");
  cmd->add_option("--delta-e", shared.delta_e, "Cis to trans energy gap in eV");
  cmd->add_option("--beta", shared.beta, "Inverse temperature in 1/eV");
  cmd->add_option("--out", shared.out, "Write output here instead of stdout");
}

void emit(const SharedOptions& shared, const std::string& payload) {
  if (shared.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(shared.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + shared.out + "'");
  out << payload;
}

// Resolves the spectrum for a state file: an embedded "levels" block wins,
// otherwise the level count selects the one- or two-molecule model built
// from the energy flags.
EnergySpectrum resolve_spectrum(const io::StateFile& file, const SharedOptions& shared) {
  if (file.spectrum) return *file.spectrum;
  if (file.diag.size() == 3) return single_molecule_model(shared.e1, shared.delta_e);
  if (file.diag.size() == 9) return two_molecule_model(shared.e1, shared.delta_e);
  throw std::runtime_error("state has " + std::to_string(file.diag.size()) +
                           " levels; embed a \"levels\" spectrum in the file");
}

// Coherent states are taken through the diagonalize step before the curve is
// built; plain populations are used as-is.
LorenzCurve state_curve(const io::StateFile& file, const EnergySpectrum& spectrum,
                        const ThermalContext& ctx) {
  if (!file.blocks.empty()) {
    const CoherentBlockState state(spectrum, file.diag, file.blocks);
    const auto [diag, rotation] = diagonalize_blocks(state);
    return build_curve(diag, spectrum, ctx);
  }
  if (auto violation = validate_population(file.diag, spectrum)) {
    throw std::runtime_error("invalid population: " + *violation);
  }
  return build_curve(file.diag, spectrum, ctx);
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (step <= 0.0) throw std::runtime_error("grid step must be positive");
  if (hi < lo) throw std::runtime_error("grid upper bound below lower bound");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double x = lo + k * step;
    if (x > hi + 1e-9) break;
    grid.push_back(x);
  }
  return grid;
}

int run(int argc, char** argv) {
  CLI::App app{"Thermomajorization toolkit for photoisomerization yields"};
  app.require_subcommand(1);

  SharedOptions shared;

  // gibbs
  auto* gibbs_cmd = app.add_subcommand("gibbs", "Thermal state of the molecular model");
  bool two_molecule = false;
  std::string format = "json";
  add_shared(gibbs_cmd, shared);
  gibbs_cmd->add_flag("--two-molecule", two_molecule, "Use the 9-level two-molecule model");
  gibbs_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // lorenz
  auto* lorenz_cmd = app.add_subcommand("lorenz", "Lorenz curve knots of a state file");
  std::string state_path;
  add_shared(lorenz_cmd, shared);
  lorenz_cmd->add_option("--state", state_path, "State JSON file")->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "Does the initial state thermomajorize the final?");
  std::string initial_path, final_path;
  add_shared(check_cmd, shared);
  check_cmd->add_option("--initial", initial_path, "Initial state JSON file")->required();
  check_cmd->add_option("--final", final_path, "Final state JSON file")->required();

  // yield
  auto* yield_cmd = app.add_subcommand("yield", "Optimal quantum yield");
  std::string definition = "both";
  double p = 0.7, lam = 0.0, resolution = 0.0;
  bool oracle = false;
  add_shared(yield_cmd, shared);
  yield_cmd->add_option("--def", definition, "any, both or single")
      ->check(CLI::IsMember({"any", "both", "single"}));
  yield_cmd->add_option("--p", p, "Excitation probability");
  yield_cmd->add_option("--lambda", lam, "Coherence magnitude, 0 <= lambda <= p/2");
  yield_cmd->add_flag("--oracle", oracle, "Use the brute-force grid search instead");
  yield_cmd
      ->add_option("--resolution", resolution,
                   "Grid step for --oracle; defaults to 0.01 on 3 levels, 0.05 on 9")
      ->check(CLI::Range(1e-6, 0.999999));

  // sweep-gap
  auto* sweep_cmd = app.add_subcommand("sweep-gap", "Yields versus the energy gap");
  double lam_hi = 0.2, lam_lo = 0.02, gap_min = 0.0, gap_max = 6.0, gap_step = 0.05;
  double sweep_p = 0.7;
  add_shared(sweep_cmd, shared);
  sweep_cmd->add_option("--p", sweep_p, "Excitation probability");
  sweep_cmd->add_option("--lambda-hi", lam_hi, "High coherence magnitude");
  sweep_cmd->add_option("--lambda-lo", lam_lo, "Low coherence magnitude");
  sweep_cmd->add_option("--gap-min", gap_min, "Smallest beta * delta_e");
  sweep_cmd->add_option("--gap-max", gap_max, "Largest beta * delta_e");
  sweep_cmd->add_option("--gap-step", gap_step, "Grid step in beta * delta_e");

  // map2d
  auto* map_cmd = app.add_subcommand("map2d", "Coherence advantage over (p, beta delta_e)");
  double p_min = 0.05, p_max = 0.95, p_step = 0.05;
  double m_gap_min = 0.0, m_gap_max = 6.0, m_gap_step = 0.05;
  add_shared(map_cmd, shared);
  map_cmd->add_option("--p-min", p_min, "Smallest excitation probability");
  map_cmd->add_option("--p-max", p_max, "Largest excitation probability");
  map_cmd->add_option("--p-step", p_step, "Excitation probability step");
  map_cmd->add_option("--gap-min", m_gap_min, "Smallest beta * delta_e");
  map_cmd->add_option("--gap-max", m_gap_max, "Largest beta * delta_e");
  map_cmd->add_option("--gap-step", m_gap_step, "Grid step in beta * delta_e");

  // fit-ridge
  auto* fit_cmd = app.add_subcommand("fit-ridge", "Fit p = p0 (exp(beta delta_e) - 1) to a map ridge");
  std::string map_path, ridge_out;
  add_shared(fit_cmd, shared);
  fit_cmd->add_option("--map", map_path, "Advantage map CSV from map2d")->required();
  fit_cmd->add_option("--ridge-out", ridge_out, "Also write the extracted ridge CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  const ThermalContext ctx(shared.beta);

  if (gibbs_cmd->parsed()) {
    const EnergySpectrum spectrum = two_molecule
                                        ? two_molecule_model(shared.e1, shared.delta_e)
                                        : single_molecule_model(shared.e1, shared.delta_e);
    const PopulationVector probs = gibbs_state(spectrum, ctx);
    if (format == "json") {
      emit(shared, io::population_json(probs));
    } else {
      std::string csv = "label,p\n";
      for (std::size_t j = 0; j < spectrum.size(); ++j) {
        csv += spectrum.level(j).label + "," + io::format_number(probs[j]) + "\n";
      }
      emit(shared, csv);
    }
    return 0;
  }

  if (lorenz_cmd->parsed()) {
    const io::StateFile file = io::load_state_file(state_path);
    const EnergySpectrum spectrum = resolve_spectrum(file, shared);
    emit(shared, io::knots_csv(state_curve(file, spectrum, ctx)));
    return 0;
  }

  if (check_cmd->parsed()) {
    const io::StateFile initial = io::load_state_file(initial_path);
    const io::StateFile final_state = io::load_state_file(final_path);
    const LorenzCurve p_curve = state_curve(initial, resolve_spectrum(initial, shared), ctx);
    const LorenzCurve q_curve = state_curve(final_state, resolve_spectrum(final_state, shared), ctx);
    emit(shared, thermomajorizes(p_curve, q_curve) ? "true" : "false");
    return 0;
  }

  if (yield_cmd->parsed()) {
    YieldReport report;
    if (resolution == 0.0) resolution = definition == "single" ? 0.01 : 0.05;
    if (definition == "single") {
      if (oracle) {
        const EnergySpectrum spectrum = single_molecule_model(shared.e1, shared.delta_e);
        report = brute_force_yield(single_molecule_initial(p), spectrum, ctx, {2}, resolution);
        report.definition = YieldDefinition::single;
      } else {
        report = qy_single(shared.e1, shared.delta_e, p, ctx);
      }
    } else {
      const PhotoswitchParams params(shared.e1, shared.delta_e, p, lam);
      if (oracle) {
        const auto state = superposition_initial_state(params);
        const auto [diag, rotation] = diagonalize_blocks(state);
        const auto subset = definition == "any" ? any_trans_subset() : both_trans_subset();
        report = brute_force_yield(diag, state.spectrum(), ctx, subset, resolution);
        report.definition = definition == "any" ? YieldDefinition::any : YieldDefinition::both;
      } else {
        report = definition == "any" ? qy_any(params, ctx) : qy_both(params, ctx);
      }
    }
    emit(shared, io::yield_report_json(report));
    return 0;
  }

  if (sweep_cmd->parsed()) {
    const auto rows = gap_sweep(shared.e1, sweep_p, lam_hi, lam_lo,
                                make_grid(gap_min, gap_max, gap_step), ctx);
    emit(shared, io::gap_sweep_csv(rows));
    return 0;
  }

  if (map_cmd->parsed()) {
    const AdvantageMap map = advantage_map(shared.e1, make_grid(p_min, p_max, p_step),
                                           make_grid(m_gap_min, m_gap_max, m_gap_step), ctx);
    emit(shared, io::advantage_map_csv(map));
    return 0;
  }

  if (fit_cmd->parsed()) {
    const AdvantageMap map = io::load_advantage_map_csv(map_path);
    const auto points = ridge_extract(map);
    if (!ridge_out.empty()) {
      std::ofstream out(ridge_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write '" + ridge_out + "'");
      out << io::ridge_csv(points);
    }
    emit(shared, io::ridge_fit_json(fit_ridge(points)));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
