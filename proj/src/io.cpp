#include "thermoiso/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace thermoiso::io {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw std::runtime_error("malformed JSON in '" + path + "': " + err.what());
  }
}

double number_at(const json& node, const std::string& where) {
  if (!node.is_number()) throw std::runtime_error(where + ": expected a number");
  return node.get<double>();
}

PopulationVector parse_probs(const json& node, const std::string& where) {
  if (!node.is_array()) throw std::runtime_error(where + ": expected an array of numbers");
  PopulationVector probs;
  probs.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    probs.push_back(number_at(node[i], where + "[" + std::to_string(i) + "]"));
  }
  return probs;
}

EnergySpectrum parse_levels(const json& node, const std::string& where) {
  if (!node.is_array()) throw std::runtime_error(where + ": expected an array of levels");
  std::vector<Level> levels;
  levels.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const json& lv = node[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!lv.is_object() || !lv.contains("label") || !lv.contains("energy")) {
      throw std::runtime_error(at + ": expected {\"label\": ..., \"energy\": ...}");
    }
    if (!lv["label"].is_string()) throw std::runtime_error(at + ".label: expected a string");
    levels.push_back({lv["label"].get<std::string>(), number_at(lv["energy"], at + ".energy")});
  }
  return EnergySpectrum(std::move(levels));
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

StateFile load_state_file(const std::string& path) {
  const json doc = read_json_file(path);
  StateFile file;
  if (doc.is_array()) {
    file.diag = parse_probs(doc, "$");
    return file;
  }
  if (!doc.is_object()) {
    throw std::runtime_error("state file '" + path +
                             "' must be a JSON array or an object with \"diag\"");
  }
  if (doc.contains("levels")) file.spectrum = parse_levels(doc["levels"], "levels");
  if (!doc.contains("diag")) throw std::runtime_error("state object is missing \"diag\"");
  file.diag = parse_probs(doc["diag"], "diag");
  if (doc.contains("blocks")) {
    const json& blocks = doc["blocks"];
    if (!blocks.is_array()) throw std::runtime_error("blocks: expected an array");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const json& blk = blocks[b];
      const std::string at = "blocks[" + std::to_string(b) + "]";
      if (!blk.is_object() || !blk.contains("i") || !blk.contains("j")) {
        throw std::runtime_error(at + ": expected {\"i\", \"j\", \"re\", \"im\"}");
      }
      if (!blk["i"].is_number_unsigned() || !blk["j"].is_number_unsigned()) {
        throw std::runtime_error(at + ": level indices must be nonnegative integers");
      }
      const double re = blk.contains("re") ? number_at(blk["re"], at + ".re") : 0.0;
      const double im = blk.contains("im") ? number_at(blk["im"], at + ".im") : 0.0;
      file.blocks.push_back(
          {blk["i"].get<std::size_t>(), blk["j"].get<std::size_t>(), {re, im}});
    }
  }
  return file;
}

std::string spectrum_json(const EnergySpectrum& spectrum) {
  std::ostringstream out;
  out << "{\"levels\":[";
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    if (j > 0) out << ',';
    out << "{\"label\":" << json(spectrum.level(j).label).dump()
        << ",\"energy\":" << format_number(spectrum.energy(j)) << '}';
  }
  out << "]}";
  return out.str();
}

EnergySpectrum parse_spectrum_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::runtime_error(std::string("malformed spectrum JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("levels")) {
    throw std::runtime_error("spectrum JSON must be an object with \"levels\"");
  }
  return parse_levels(doc["levels"], "levels");
}

std::string population_json(const PopulationVector& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j > 0) out << ',';
    out << format_number(v[j]);
  }
  out << ']';
  return out.str();
}

std::string state_json(const CoherentBlockState& state) {
  std::ostringstream out;
  out << "{\"diag\":" << population_json(state.diag()) << ",\"blocks\":[";
  for (std::size_t b = 0; b < state.blocks().size(); ++b) {
    const CoherentBlock& blk = state.blocks()[b];
    if (b > 0) out << ',';
    out << "{\"i\":" << blk.i << ",\"j\":" << blk.j << ",\"re\":" << format_number(blk.lam.real())
        << ",\"im\":" << format_number(blk.lam.imag()) << '}';
  }
  out << "]}";
  return out.str();
}

std::string definition_name(YieldDefinition definition) {
  switch (definition) {
    case YieldDefinition::any: return "any";
    case YieldDefinition::both: return "both";
    case YieldDefinition::single: return "single";
    case YieldDefinition::subset: return "subset";
  }
  return "subset";
}

std::string yield_report_json(const YieldReport& report) {
  std::ostringstream out;
  out << "{\"definition\":\"" << definition_name(report.definition)
      << "\",\"value\":" << format_number(report.value)
      << ",\"achiever\":" << population_json(report.achiever) << '}';
  return out.str();
}

std::string ridge_fit_json(const RidgeFit& fit) {
  std::ostringstream out;
  out << "{\"p0\":" << format_number(fit.p0) << ",\"residual\":" << format_number(fit.residual)
      << ",\"points\":" << fit.points.size() << '}';
  return out.str();
}

std::string knots_csv(const LorenzCurve& curve) {
  std::ostringstream out;
  out << "x,y\n";
  for (std::size_t k = 0; k < curve.knot_count(); ++k) {
    out << format_number(curve.xs[k]) << ',' << format_number(curve.ys[k]) << '\n';
  }
  return out.str();
}

std::string gap_sweep_csv(const std::vector<GapSweepRow>& rows) {
  std::ostringstream out;
  out << "beta_delta_e,qy_any_hi,qy_any_lo,qy_both_hi,qy_both_lo,qy_single\n";
  for (const GapSweepRow& row : rows) {
    out << format_number(row.beta_delta_e) << ',' << format_number(row.qy_any_hi) << ','
        << format_number(row.qy_any_lo) << ',' << format_number(row.qy_both_hi) << ','
        << format_number(row.qy_both_lo) << ',' << format_number(row.qy_single) << '\n';
  }
  return out.str();
}

std::string advantage_map_csv(const AdvantageMap& map) {
  std::ostringstream out;
  out << "p,beta_delta_e,delta\n";
  for (std::size_t i = 0; i < map.p_grid.size(); ++i) {
    for (std::size_t j = 0; j < map.gap_grid.size(); ++j) {
      out << format_number(map.p_grid[i]) << ',' << format_number(map.gap_grid[j]) << ','
          << format_number(map.delta[i][j]) << '\n';
    }
  }
  return out.str();
}

std::string ridge_csv(const std::vector<RidgePoint>& points) {
  std::ostringstream out;
  out << "p,beta_delta_e_star\n";
  for (const RidgePoint& pt : points) {
    out << format_number(pt.p) << ',' << format_number(pt.beta_delta_e) << '\n';
  }
  return out.str();
}

AdvantageMap load_advantage_map_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "p,beta_delta_e,delta") {
    throw std::runtime_error("'" + path + "' is not an advantage map CSV (bad header)");
  }
  AdvantageMap map;
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double p = 0.0, gap = 0.0, delta = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &p, &gap, &delta) != 3) {
      throw std::runtime_error("'" + path + "' line " + std::to_string(lineno) +
                               ": expected p,beta_delta_e,delta");
    }
    if (map.p_grid.empty() || p != map.p_grid.back()) {
      if (!map.p_grid.empty() && map.p_grid.front() == p) {
        throw std::runtime_error("'" + path + "': repeated p block at line " +
                                 std::to_string(lineno));
      }
      map.p_grid.push_back(p);
    }
    if (map.p_grid.size() == 1) map.gap_grid.push_back(gap);
    values.push_back(delta);
  }
  const std::size_t cols = map.gap_grid.size();
  if (cols == 0 || values.size() != map.p_grid.size() * cols) {
    throw std::runtime_error("'" + path + "': ragged map; " + std::to_string(values.size()) +
                             " cells for " + std::to_string(map.p_grid.size()) + " x " +
                             std::to_string(cols) + " grid");
  }
  map.delta.resize(map.p_grid.size());
  for (std::size_t i = 0; i < map.p_grid.size(); ++i) {
    map.delta[i].assign(values.begin() + static_cast<std::ptrdiff_t>(i * cols),
                        values.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
  }
  return map;
}

}  // namespace thermoiso::io
