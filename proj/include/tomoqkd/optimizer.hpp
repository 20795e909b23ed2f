#ifndef TOMOQKD_OPTIMIZER_HPP
#define TOMOQKD_OPTIMIZER_HPP

#include <array>
#include <cstdint>

#include "tomoqkd/infotheory.hpp"
#include "tomoqkd/measurement.hpp"

// Maximization of Eve's information: a 1-D search over theta for the
// z family, a 2-D search over (a, c) for the x/y family, and an
// independent accessible-information ascent over general rank-1 POVMs
// used to cross-check the structured families.

namespace tomoqkd {

struct OptResult {
  double best_value = 0.0;
  std::array<double, 2> best_params{};  // {theta, 0} or {a_param, c_param}
  long evaluations = 0;
  bool converged = false;
};

// 64-point grid over theta in [-pi/2, pi/2) followed by golden-section
// refinement to |dtheta| < 1e-10.
OptResult maximize_theta(const AncillaEnsemble& e);

// 64x64 grid over (a, c) in [-1/sqrt(2), 1/sqrt(2)]^2 followed by
// coordinate descent with a shrinking step, to step < 1e-9.
OptResult maximize_ac(const AncillaEnsemble& e, const StateCoefficients& c);

struct OracleConfig {
  int restarts = 20;
  int max_outcomes = 0;  // 0 means span rank + 2
  double step_tolerance = 1e-9;
  std::uint64_t seed = 0;
};

// Random-restart steepest ascent over unconstrained rank-1 POVM kets,
// re-projected to completeness through the inverse square root of their
// frame operator before every evaluation.  Deterministic given the seed
// (restart r uses seed + r).
OptResult accessible_info_oracle(const AncillaEnsemble& e,
                                 const OracleConfig& cfg);

}  // namespace tomoqkd

#endif  // TOMOQKD_OPTIMIZER_HPP
