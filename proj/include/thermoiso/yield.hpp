#pragma once

#include <cstdint>

#include "thermoiso/lorenz.hpp"
#include "thermoiso/model.hpp"

namespace thermoiso {

enum class YieldDefinition { any, both, single, subset };

/// Optimal yield value together with a final population vector attaining it.
struct YieldReport {
  double value = 0.0;
  PopulationVector achiever;
  YieldDefinition definition = YieldDefinition::subset;
};

inline constexpr std::uint64_t kDefaultCandidateCap = 100'000'000;

/// Maximal total final population on `subset` over all states thermomajorized
/// by `initial_curve`.
///
/// The optimum is geometric: with W_S = sum_{j in S} exp(-beta E_j), any
/// reachable q satisfies sum_{j in S} q_j <= [L(q)](W_S) <= [L(p)](W_S), and
/// the bound is attained by placing mass m* = [L(p)](W_S) Gibbs-proportionally
/// within S and the rest Gibbs-proportionally on the complement. That
/// achiever's curve consists of two chords under the concave initial curve,
/// so it is itself thermomajorized by the initial state.
YieldReport max_subset_mass(const LorenzCurve& initial_curve, const EnergySpectrum& spectrum,
                            const ThermalContext& ctx, const std::vector<std::size_t>& subset,
                            YieldDefinition definition = YieldDefinition::subset);

/// Optimal probability that both molecules reach trans, for the superposition
/// initial state: diagonalize the coherent block, build the Lorenz curve,
/// maximize the mass of {tt}.
YieldReport qy_both(const PhotoswitchParams& params, const ThermalContext& ctx);

/// Optimal probability that at least one molecule reaches trans
/// (subset {gt, tg, et, te, tt}).
YieldReport qy_any(const PhotoswitchParams& params, const ThermalContext& ctx);

/// Single-molecule yield: initial (1-p, p, 0) on the 3-level model,
/// subset {t}.
YieldReport qy_single(double e1, double delta_e, double p, const ThermalContext& ctx);

/// Independent grid oracle mirroring the sampling method the analytic
/// optimizer replaces: enumerates every population vector on the simplex
/// lattice with step 1/round(1/resolution), keeps those whose Lorenz curve
/// stays within one grid step of the initial curve, and returns the maximal
/// subset mass found.
///
/// The one-step admission band is the vertical sampling error inherent in a
/// gridded search: without it no lattice point at all is admissible when the
/// initial state sits at the Gibbs floor. It bounds the result within one
/// grid step of the analytic optimum on either side, and the result
/// converges to it as resolution -> 0.
///
/// The search is exact over the lattice. Subtrees are discarded only via
/// necessary admission conditions (a candidate with q_j above the admitted
/// band at that level's width can never pass the full check), so the result
/// equals plain exhaustive enumeration; ties in value resolve to the
/// lexicographically smallest achiever regardless of thread count.
///
/// Throws when the nominal lattice size exceeds `candidate_cap` (pick a
/// coarser resolution or fewer levels) and when no lattice point is
/// admissible at this resolution.
YieldReport brute_force_yield(const PopulationVector& initial, const EnergySpectrum& spectrum,
                              const ThermalContext& ctx, const std::vector<std::size_t>& subset,
                              double resolution,
                              std::uint64_t candidate_cap = kDefaultCandidateCap);

/// Oracle variant with candidate states living on their own spectrum, for
/// cross-checks that exploit degeneracy: candidates on `candidate_spectrum`
/// are compared against an initial curve from a possibly different spectrum.
YieldReport brute_force_yield(const LorenzCurve& initial_curve,
                              const EnergySpectrum& candidate_spectrum,
                              const ThermalContext& ctx, const std::vector<std::size_t>& subset,
                              double resolution,
                              std::uint64_t candidate_cap = kDefaultCandidateCap);

}  // namespace thermoiso
