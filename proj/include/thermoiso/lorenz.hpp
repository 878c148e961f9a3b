#pragma once

#include "thermoiso/core.hpp"

namespace thermoiso {

/// Piecewise-linear concave curve stored as ordered knots.
///
/// Knot 0 is the origin; knot j accumulates the Gibbs-rescaled width
/// exp(-beta E) on x and the population on y, in nonincreasing order of the
/// rescaled coefficients p_j exp(beta E_j). The final knot is (Z, 1). Zero
/// populations are kept as zero-height knots at the tail, so the knot count
/// is always the level count plus one.
struct LorenzCurve {
  std::vector<double> xs;
  std::vector<double> ys;
  double beta = 0.0;

  std::size_t knot_count() const { return xs.size(); }
  double z() const { return xs.back(); }
};

/// Builds the Lorenz curve of `v` on `spectrum` at inverse temperature
/// `ctx.beta`. Ties in the descending key sort are broken by smaller energy
/// first, then by level order, so knot lists are reproducible bit for bit.
LorenzCurve build_curve(const PopulationVector& v, const EnergySpectrum& spectrum,
                        const ThermalContext& ctx);

/// Linear interpolation between bracketing knots; evaluate(curve, 0) == 0 and
/// evaluate(curve, Z) == 1. Throws std::domain_error for x outside
/// [-1e-12, Z + 1e-9].
double evaluate(const LorenzCurve& curve, double x);

/// True iff the first curve lies on or above the second at every x. Curves
/// from different spectra are compared over the union of their domains, each
/// extended flat at y = 1 beyond its own Z. Checking the union of knot
/// x-values is sufficient for piecewise-linear concave curves.
/// Throws std::invalid_argument when the curves were built at different beta.
bool thermomajorizes(const LorenzCurve& p_curve, const LorenzCurve& q_curve);

}  // namespace thermoiso
