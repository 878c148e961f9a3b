#pragma once

#include <string>

#include "thermoiso/modes.hpp"
#include "thermoiso/sweep.hpp"
#include "thermoiso/yield.hpp"

namespace thermoiso::io {

/// Formats with 12 significant digits, the serialization width used by every
/// emitter here; round-trip stable in double precision and diff friendly.
std::string format_number(double value);

/// Parsed state file: a JSON array is a bare population vector; an object
/// carries "diag", optional "blocks" and an optional embedded "levels"
/// spectrum override.
struct StateFile {
  std::optional<EnergySpectrum> spectrum;
  PopulationVector diag;
  std::vector<CoherentBlock> blocks;
};

/// Loads and validates a state file, reporting schema violations with the
/// offending JSON path. Structural invariants (positivity, degeneracy) are
/// checked later when the state is bound to a spectrum.
StateFile load_state_file(const std::string& path);

/// `{"levels":[{"label":"gg","energy":0.0}, ...]}`
std::string spectrum_json(const EnergySpectrum& spectrum);
EnergySpectrum parse_spectrum_json(const std::string& text);

std::string population_json(const PopulationVector& v);
std::string state_json(const CoherentBlockState& state);

std::string definition_name(YieldDefinition definition);
std::string yield_report_json(const YieldReport& report);

std::string ridge_fit_json(const RidgeFit& fit);

/// CSV emitters; `.` decimal separator and `\n` line endings unconditionally.
std::string knots_csv(const LorenzCurve& curve);
std::string gap_sweep_csv(const std::vector<GapSweepRow>& rows);
std::string advantage_map_csv(const AdvantageMap& map);
std::string ridge_csv(const std::vector<RidgePoint>& points);

/// Reads back the long-form map CSV written by advantage_map_csv.
AdvantageMap load_advantage_map_csv(const std::string& path);

}  // namespace thermoiso::io
