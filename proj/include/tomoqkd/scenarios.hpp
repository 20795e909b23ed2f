#ifndef TOMOQKD_SCENARIOS_HPP
#define TOMOQKD_SCENARIOS_HPP

#include <string>
#include <vector>

#include "tomoqkd/infotheory.hpp"
#include "tomoqkd/optimizer.hpp"

// End-to-end analyses: one full yield report per parameter point,
// dense parameter sweeps and zero-yield threshold finding.

namespace tomoqkd {

YieldReport analyze(const SourceParams& params);

enum class Axis { Ratio, G, V, F };

struct AxisSpec {
  Axis axis = Axis::V;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;  // >= 2, or 1 for a single-point sweep
};

struct SweepSpec {
  SourceParams fixed;
  std::vector<AxisSpec> axes;  // one or two
};

struct SweepRow {
  SourceParams params;
  double i_ab_z = 0, i_ae_z = 0, yield_z = 0;
  double i_ab_xy = 0, i_ae_xy = 0, yield_xy = 0;
  double overall = 0;
};

// Dense grid evaluation, row-major over the axes as declared.  Grid points
// run in parallel (capped by TOMOQKD_THREADS); row order is deterministic.
std::vector<SweepRow> sweep(const SweepSpec& spec);

struct ThresholdQuery {
  char moving = 'v';  // 'v' or 'f'
  SourceParams fixed;
  double tolerance = 1e-4;  // in the moving parameter
};

struct ThresholdResult {
  double crossing = 0.0;
  double low_yield = 0.0;   // overall yield at the zero end of the bracket
  double high_yield = 0.0;  // overall yield at the positive end
};

// Bisection for the point where the overall yield transitions from zero
// to positive.  For moving == 'f' the yield at each F is first maximized
// over V in [0, 1] (101-point grid plus golden refinement).
// Throws std::runtime_error("no crossing in range ...") if both range
// endpoints sit on the same side.
ThresholdResult find_threshold(const ThresholdQuery& q);

}  // namespace tomoqkd

#endif  // TOMOQKD_SCENARIOS_HPP
