#include "thermoiso/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace thermoiso {

std::vector<GapSweepRow> gap_sweep(double e1, double p, double lam_hi, double lam_lo,
                                   const std::vector<double>& gap_grid,
                                   const ThermalContext& ctx) {
  if (gap_grid.empty()) throw std::invalid_argument("gap grid must not be empty");
  if (lam_hi < lam_lo) throw std::invalid_argument("lam_hi must be >= lam_lo");
  std::vector<GapSweepRow> rows;
  rows.reserve(gap_grid.size());
  for (double gap : gap_grid) {
    const double delta_e = gap / ctx.beta;
    const PhotoswitchParams hi(e1, delta_e, p, lam_hi);
    const PhotoswitchParams lo(e1, delta_e, p, lam_lo);
    GapSweepRow row;
    row.beta_delta_e = gap;
    row.qy_any_hi = qy_any(hi, ctx).value;
    row.qy_any_lo = qy_any(lo, ctx).value;
    row.qy_both_hi = qy_both(hi, ctx).value;
    row.qy_both_lo = qy_both(lo, ctx).value;
    row.qy_single = qy_single(e1, delta_e, p, ctx).value;
    rows.push_back(row);
  }
  return rows;
}

AdvantageMap advantage_map(double e1, const std::vector<double>& p_grid,
                           const std::vector<double>& gap_grid, const ThermalContext& ctx) {
  if (p_grid.empty() || gap_grid.empty()) {
    throw std::invalid_argument("advantage map grids must not be empty");
  }
  AdvantageMap map;
  map.p_grid = p_grid;
  map.gap_grid = gap_grid;
  map.delta.assign(p_grid.size(), std::vector<double>(gap_grid.size(), 0.0));
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    for (std::size_t j = 0; j < gap_grid.size(); ++j) {
      const double delta_e = gap_grid[j] / ctx.beta;
      const double coherent = qy_any(PhotoswitchParams(e1, delta_e, p, 0.5 * p), ctx).value;
      const double incoherent = qy_any(PhotoswitchParams(e1, delta_e, p, 0.0), ctx).value;
      map.delta[i][j] = coherent - incoherent;
    }
  }
  return map;
}

std::vector<RidgePoint> ridge_extract(const AdvantageMap& map) {
  if (map.p_grid.empty() || map.gap_grid.empty()) {
    throw std::invalid_argument("cannot extract a ridge from an empty map");
  }
  constexpr double kRidgeFloor = 1e-6;
  std::vector<RidgePoint> points;
  for (std::size_t i = 0; i < map.p_grid.size(); ++i) {
    const std::vector<double>& row = map.delta[i];
    double row_max = row[0];
    for (double v : row) row_max = std::max(row_max, v);
    if (row_max < kRidgeFloor) continue;
    double gap_sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] >= row_max - kCurveTol) {
        gap_sum += map.gap_grid[j];
        ++hits;
      }
    }
    points.push_back({gap_sum / static_cast<double>(hits), map.p_grid[i]});
  }
  return points;
}

RidgeFit fit_ridge(const std::vector<RidgePoint>& points) {
  if (points.size() < 2) throw std::invalid_argument("ridge fit needs at least two points");
  double fp = 0.0, ff = 0.0;
  for (const RidgePoint& pt : points) {
    const double f = std::expm1(pt.beta_delta_e);
    fp += f * pt.p;
    ff += f * f;
  }
  if (ff == 0.0) {
    throw std::invalid_argument("degenerate ridge fit: all gaps are zero");
  }
  RidgeFit fit;
  fit.points = points;
  fit.p0 = fp / ff;
  double sq = 0.0;
  for (const RidgePoint& pt : points) {
    const double misfit = pt.p - fit.p0 * std::expm1(pt.beta_delta_e);
    sq += misfit * misfit;
  }
  fit.residual = std::sqrt(sq / static_cast<double>(points.size()));
  return fit;
}

}  // namespace thermoiso
