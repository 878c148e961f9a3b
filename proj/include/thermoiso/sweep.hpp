#pragma once

#include "thermoiso/yield.hpp"

namespace thermoiso {

/// One gap-sweep sample: optimal yields at dimensionless gap beta * delta_e
/// for a high- and a low-coherence initial state, plus the single-molecule
/// yield at the same excitation probability.
struct GapSweepRow {
  double beta_delta_e = 0.0;
  double qy_any_hi = 0.0;
  double qy_any_lo = 0.0;
  double qy_both_hi = 0.0;
  double qy_both_lo = 0.0;
  double qy_single = 0.0;
};

/// Coherence advantage QY_any(lam_max) - QY_any(0) over a (p, beta delta_e)
/// grid, with lam_max = p/2 per cell.
struct AdvantageMap {
  std::vector<double> p_grid;
  std::vector<double> gap_grid;                // beta * delta_e, dimensionless
  std::vector<std::vector<double>> delta;      // delta[i][j]: p_grid[i] x gap_grid[j]
};

struct RidgePoint {
  double beta_delta_e = 0.0;
  double p = 0.0;
};

/// Single-parameter least-squares fit of p = p0 (exp(beta delta_e) - 1).
struct RidgeFit {
  std::vector<RidgePoint> points;
  double p0 = 0.0;
  double residual = 0.0;  // root mean square misfit
};

/// Evaluates the analytic optimizer at every gap in `gap_grid` (values are
/// beta * delta_e). Default grids elsewhere use [0, 6] in steps of 0.05.
std::vector<GapSweepRow> gap_sweep(double e1, double p, double lam_hi, double lam_lo,
                                   const std::vector<double>& gap_grid,
                                   const ThermalContext& ctx);

/// Fills the advantage map cell by cell with the analytic optimizer.
AdvantageMap advantage_map(double e1, const std::vector<double>& p_grid,
                           const std::vector<double>& gap_grid, const ThermalContext& ctx);

/// For each p row, the mean beta delta_e over all cells attaining the row
/// maximum within 1e-9. Rows whose maximum falls below 1e-6 carry no
/// meaningful ridge and are skipped.
std::vector<RidgePoint> ridge_extract(const AdvantageMap& map);

/// The model is linear in p0, so the least-squares solution is closed form:
/// p0 = sum_i f_i p_i / sum_i f_i^2 with f_i = exp(beta delta_e_i) - 1.
/// Throws when fewer than two points are given or every gap is zero.
RidgeFit fit_ridge(const std::vector<RidgePoint>& points);

}  // namespace thermoiso
