#include "thermoiso/yield.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace thermoiso {

namespace {

std::vector<std::size_t> checked_subset(const std::vector<std::size_t>& subset, std::size_t d) {
  if (subset.empty()) throw std::invalid_argument("subset must not be empty");
  std::set<std::size_t> unique(subset.begin(), subset.end());
  if (*unique.rbegin() >= d) throw std::invalid_argument("subset index out of range");
  return {unique.begin(), unique.end()};
}

}  // namespace

YieldReport max_subset_mass(const LorenzCurve& initial_curve, const EnergySpectrum& spectrum,
                            const ThermalContext& ctx, const std::vector<std::size_t>& subset,
                            YieldDefinition definition) {
  if (initial_curve.beta != ctx.beta) {
    throw std::invalid_argument("initial curve was built at a different beta");
  }
  const std::size_t d = spectrum.size();
  const auto sub = checked_subset(subset, d);

  std::vector<double> width(d);
  for (std::size_t j = 0; j < d; ++j) width[j] = std::exp(-ctx.beta * spectrum.energy(j));

  double w_subset = 0.0;
  for (std::size_t j : sub) w_subset += width[j];
  const double z = initial_curve.z();
  const double mass = evaluate(initial_curve, std::min(w_subset, z));

  // Gibbs-proportional distribution inside the subset and on its complement
  // keeps the achiever's curve at two chords under the initial curve.
  YieldReport report;
  report.value = mass;
  report.definition = definition;
  report.achiever.assign(d, 0.0);
  for (std::size_t j : sub) report.achiever[j] = mass * width[j] / w_subset;
  const double rest = 1.0 - mass;
  const double w_complement = z - w_subset;
  if (rest > 0.0 && w_complement > 0.0) {
    std::size_t s = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (s < sub.size() && sub[s] == j) {
        ++s;
        continue;
      }
      report.achiever[j] = rest * width[j] / w_complement;
    }
  }
  return report;
}

YieldReport qy_both(const PhotoswitchParams& params, const ThermalContext& ctx) {
  const auto state = superposition_initial_state(params);
  const auto [diag, rotation] = diagonalize_blocks(state);
  const LorenzCurve curve = build_curve(diag, state.spectrum(), ctx);
  return max_subset_mass(curve, state.spectrum(), ctx, both_trans_subset(),
                         YieldDefinition::both);
}

YieldReport qy_any(const PhotoswitchParams& params, const ThermalContext& ctx) {
  const auto state = superposition_initial_state(params);
  const auto [diag, rotation] = diagonalize_blocks(state);
  const LorenzCurve curve = build_curve(diag, state.spectrum(), ctx);
  return max_subset_mass(curve, state.spectrum(), ctx, any_trans_subset(), YieldDefinition::any);
}

YieldReport qy_single(double e1, double delta_e, double p, const ThermalContext& ctx) {
  const EnergySpectrum spectrum = single_molecule_model(e1, delta_e);
  const PopulationVector initial = single_molecule_initial(p);
  const LorenzCurve curve = build_curve(initial, spectrum, ctx);
  return max_subset_mass(curve, spectrum, ctx, {2}, YieldDefinition::single);
}

namespace {

// Exhaustive search state shared by all workers.
//
// A candidate is kept when its curve stays within one grid step of the
// initial curve at every knot. The quantized search needs that much vertical
// slack: near the Gibbs floor no lattice curve lies strictly below the
// initial one, so a sub-step tolerance would leave the lattice empty. The
// slack also bounds the reported value within one step of the true optimum
// from above, matching the step-below error of the lattice itself.
//
// The per-level unit caps are necessary feasibility conditions (the
// candidate's own curve at x = width_j already reaches q_j, so q_j must not
// exceed the admitted bound there); they shrink the lattice without
// excluding any admissible candidate.
struct OracleProblem {
  const LorenzCurve* initial = nullptr;
  int d = 0;
  int n = 0;
  double slack = kCurveTol;     // vertical admission slack, just under 1/n
  std::vector<double> width;    // exp(-beta E_j) per candidate level
  std::vector<double> key_fac;  // exp(beta (E_j - E_max)), fixes the sort order
  std::vector<char> in_subset;
  std::vector<int> cap;              // max admissible units per level
  std::vector<long long> s_suffix;   // sum of caps over subset levels >= t
  std::atomic<long long> global_best{-1};
};

struct WorkerResult {
  long long best = -1;
  std::vector<int> achiever;
};

// Walks the candidate's Lorenz knots in ascending x against the initial
// curve, with the flat y = 1 extension past the initial curve's Z.
class CurveWalker {
 public:
  explicit CurveWalker(const LorenzCurve& curve) : xs_(curve.xs), ys_(curve.ys) {}

  void reset() { seg_ = 0; }

  double bound(double x) {
    const std::size_t last = xs_.size() - 1;
    if (x >= xs_[last]) return 1.0;
    while (seg_ + 1 < last && xs_[seg_ + 1] < x) ++seg_;
    const double t = (x - xs_[seg_]) / (xs_[seg_ + 1] - xs_[seg_]);
    return ys_[seg_] + t * (ys_[seg_ + 1] - ys_[seg_]);
  }

 private:
  const std::vector<double>& xs_;
  const std::vector<double>& ys_;
  std::size_t seg_ = 0;
};

class OracleWorker {
 public:
  OracleWorker(OracleProblem& prob) : prob_(prob), walker_(*prob.initial), k_(prob.d, 0) {}

  void run_first_coordinate(int k0) {
    k_[0] = k0;
    const long long units = prob_.in_subset[0] ? k0 : 0;
    if (prob_.d == 1) {
      if (k0 == prob_.n) leaf(units);
    } else {
      recurse(1, prob_.n - k0, units);
    }
  }

  WorkerResult take_result() { return {best_, std::move(achiever_)}; }

 private:
  long long needed() const {
    const long long global = prob_.global_best.load(std::memory_order_relaxed);
    const long long local = achiever_.empty() ? best_ : best_ + 1;
    return std::max(global, local);
  }

  void leaf(long long units) {
    if (units < std::max(needed(), 0LL)) return;
    if (!feasible()) return;
    best_ = units;
    achiever_.assign(k_.begin(), k_.end());
    long long seen = prob_.global_best.load(std::memory_order_relaxed);
    while (seen < units &&
           !prob_.global_best.compare_exchange_weak(seen, units, std::memory_order_relaxed)) {
    }
  }

  void recurse(int t, int budget, long long units) {
    const long long reachable = units + std::min<long long>(budget, prob_.s_suffix[t]);
    if (reachable < std::max(needed(), 0LL)) return;
    if (t == prob_.d - 1) {
      if (budget > prob_.cap[t]) return;
      k_[t] = budget;
      leaf(units + (prob_.in_subset[t] ? budget : 0));
      return;
    }
    const int hi = std::min(prob_.cap[t], budget);
    for (int v = 0; v <= hi; ++v) {
      k_[t] = v;
      recurse(t + 1, budget - v, units + (prob_.in_subset[t] ? v : 0));
    }
  }

  bool feasible() {
    // Zero entries sort last and only extend the curve flat, so they cannot
    // break dominance; check the mass-carrying knots only.
    int idx[16];
    double key[16];
    int m = 0;
    for (int j = 0; j < prob_.d; ++j) {
      if (k_[j] == 0) continue;
      const double kj = static_cast<double>(k_[j]) * prob_.key_fac[j];
      int pos = m;
      while (pos > 0 && key[pos - 1] < kj) {
        key[pos] = key[pos - 1];
        idx[pos] = idx[pos - 1];
        --pos;
      }
      key[pos] = kj;
      idx[pos] = j;
      ++m;
    }
    walker_.reset();
    const double inv_n = 1.0 / static_cast<double>(prob_.n);
    double x = 0.0, y = 0.0;
    for (int r = 0; r < m; ++r) {
      const int j = idx[r];
      x += prob_.width[j];
      y += static_cast<double>(k_[j]) * inv_n;
      if (y > walker_.bound(x) + prob_.slack) return false;
    }
    return true;
  }

  OracleProblem& prob_;
  CurveWalker walker_;
  std::vector<int> k_;
  long long best_ = -1;
  std::vector<int> achiever_;
};

std::uint64_t lattice_size(int n, int d, std::uint64_t cap) {
  // C(n + d - 1, d - 1), saturating just above the cap.
  unsigned __int128 count = 1;
  for (int i = 1; i < d; ++i) {
    count = count * static_cast<unsigned>(n + i) / static_cast<unsigned>(i);
    if (count > static_cast<unsigned __int128>(cap) * 16) break;
  }
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  return count > kMax ? kMax : static_cast<std::uint64_t>(count);
}

}  // namespace

YieldReport brute_force_yield(const LorenzCurve& initial_curve,
                              const EnergySpectrum& candidate_spectrum, const ThermalContext& ctx,
                              const std::vector<std::size_t>& subset, double resolution,
                              std::uint64_t candidate_cap) {
  if (initial_curve.beta != ctx.beta) {
    throw std::invalid_argument("initial curve was built at a different beta");
  }
  if (!(resolution > 0.0 && resolution < 1.0)) {
    throw std::invalid_argument("resolution must lie in (0, 1)");
  }
  const std::size_t d = candidate_spectrum.size();
  if (d > 9) {
    throw std::invalid_argument("brute-force oracle is limited to 9 levels");
  }
  const auto sub = checked_subset(subset, d);
  const int n = static_cast<int>(std::llround(1.0 / resolution));

  const std::uint64_t nominal = lattice_size(n, static_cast<int>(d), candidate_cap);
  if (nominal > candidate_cap) {
    throw std::runtime_error(
        "grid of " + std::to_string(nominal) + " candidates exceeds the cap of " +
        std::to_string(candidate_cap) + "; use a coarser resolution or fewer levels");
  }

  OracleProblem prob;
  prob.initial = &initial_curve;
  prob.d = static_cast<int>(d);
  prob.n = n;
  prob.width.resize(d);
  prob.key_fac.resize(d);
  prob.in_subset.assign(d, 0);
  for (std::size_t j : sub) prob.in_subset[j] = 1;
  double e_max = candidate_spectrum.energy(0);
  for (std::size_t j = 1; j < d; ++j) e_max = std::max(e_max, candidate_spectrum.energy(j));
  for (std::size_t j = 0; j < d; ++j) {
    prob.width[j] = std::exp(-ctx.beta * candidate_spectrum.energy(j));
    prob.key_fac[j] = std::exp(ctx.beta * (candidate_spectrum.energy(j) - e_max));
  }
  prob.slack = std::max(kCurveTol, 1.0 / static_cast<double>(n) - kCurveTol);
  prob.cap.resize(d);
  {
    CurveWalker walker(initial_curve);
    for (std::size_t j = 0; j < d; ++j) {
      walker.reset();
      const double level_max = walker.bound(prob.width[j]) + prob.slack;
      prob.cap[j] = static_cast<int>(
          std::min<double>(n, std::floor(level_max * static_cast<double>(n) + 1e-7)));
    }
  }
  prob.s_suffix.assign(d + 1, 0);
  for (std::size_t j = d; j-- > 0;) {
    prob.s_suffix[j] = prob.s_suffix[j + 1] + (prob.in_subset[j] ? prob.cap[j] : 0);
  }

  // First-coordinate subtrees are independent; workers pull them from a
  // shared counter. The merged result does not depend on the schedule.
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      nominal < 200'000 ? 1u : std::min({hw, 8u, static_cast<unsigned>(prob.cap[0] + 1)});

  std::vector<WorkerResult> results(workers);
  std::atomic<int> next_k0{0};
  auto body = [&](unsigned w) {
    OracleWorker worker(prob);
    for (int k0 = next_k0.fetch_add(1); k0 <= prob.cap[0]; k0 = next_k0.fetch_add(1)) {
      worker.run_first_coordinate(k0);
    }
    results[w] = worker.take_result();
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (std::thread& t : pool) t.join();
  }

  const WorkerResult* winner = nullptr;
  for (const WorkerResult& r : results) {
    if (r.best < 0) continue;
    if (winner == nullptr || r.best > winner->best ||
        (r.best == winner->best && r.achiever < winner->achiever)) {
      winner = &r;
    }
  }
  if (winner == nullptr) {
    throw std::runtime_error("no grid candidate is thermomajorized by the initial state; "
                             "refine the resolution");
  }

  YieldReport report;
  report.definition = YieldDefinition::subset;
  report.value = static_cast<double>(winner->best) / static_cast<double>(n);
  report.achiever.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    report.achiever[j] = static_cast<double>(winner->achiever[j]) / static_cast<double>(n);
  }
  return report;
}

YieldReport brute_force_yield(const PopulationVector& initial, const EnergySpectrum& spectrum,
                              const ThermalContext& ctx, const std::vector<std::size_t>& subset,
                              double resolution, std::uint64_t candidate_cap) {
  const LorenzCurve curve = build_curve(initial, spectrum, ctx);
  return brute_force_yield(curve, spectrum, ctx, subset, resolution, candidate_cap);
}

}  // namespace thermoiso
