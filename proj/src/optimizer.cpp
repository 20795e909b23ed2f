#include "tomoqkd/optimizer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace tomoqkd {

namespace {

const double kAcLimit = 1.0 / std::sqrt(2.0);
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// Golden-section maximization on [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, double xtol, long& evals,
                  double& best_x) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  evals += 2;
  while (b - a > xtol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
    ++evals;
  }
  if (f1 >= f2) {
    best_x = x1;
    return f1;
  }
  best_x = x2;
  return f2;
}

}  // namespace

OptResult maximize_theta(const AncillaEnsemble& e) {
  if (e.basis != Basis::Z)
    throw std::invalid_argument("maximize_theta needs a Z ensemble");
  OptResult res;
  auto objective = [&](double theta) {
    return i_ae(e, z_family(e, ZFamilyParams{theta}));
  };

  constexpr int kGrid = 64;
  const double lo = -M_PI / 2, span = M_PI;
  double best_theta = lo, best = -1.0;
  for (int i = 0; i < kGrid; ++i) {
    const double theta = lo + span * i / kGrid;  // half-open [-pi/2, pi/2)
    const double v = objective(theta);
    ++res.evaluations;
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  const double h = span / kGrid;
  double refined_theta = best_theta;
  const double refined =
      golden_max(objective, best_theta - h, best_theta + h, 1e-10,
                 res.evaluations, refined_theta);
  if (refined > best) {
    best = refined;
    best_theta = refined_theta;
  }
  res.best_value = best;
  res.best_params = {best_theta, 0.0};
  res.converged = true;
  return res;
}

OptResult maximize_ac(const AncillaEnsemble& e, const StateCoefficients& c) {
  if (e.basis == Basis::Z)
    throw std::invalid_argument("maximize_ac needs an X/Y ensemble");
  OptResult res;
  auto objective = [&](double a, double cc) {
    return i_ae(e, xy_family(e, c, XYFamilyParams{a, cc}));
  };

  constexpr int kGrid = 64;
  double best_a = 0.0, best_c = 0.0, best = -1.0;
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j) {
      const double a = -kAcLimit + 2 * kAcLimit * i / (kGrid - 1);
      const double cc = -kAcLimit + 2 * kAcLimit * j / (kGrid - 1);
      const double v = objective(a, cc);
      ++res.evaluations;
      // ties broken toward the lexicographically smallest point
      if (v > best + 1e-15) {
        best = v;
        best_a = a;
        best_c = cc;
      }
    }

  double step = 2 * kAcLimit / (kGrid - 1);
  while (step >= 1e-9) {
    bool improved = false;
    const double cand_a[2] = {best_a - step, best_a + step};
    for (double a : cand_a) {
      a = std::clamp(a, -kAcLimit, kAcLimit);
      const double v = objective(a, best_c);
      ++res.evaluations;
      if (v > best) {
        best = v;
        best_a = a;
        improved = true;
      }
    }
    const double cand_c[2] = {best_c - step, best_c + step};
    for (double cc : cand_c) {
      cc = std::clamp(cc, -kAcLimit, kAcLimit);
      const double v = objective(best_a, cc);
      ++res.evaluations;
      if (v > best) {
        best = v;
        best_c = cc;
        improved = true;
      }
    }
    if (!improved) step /= 2;
  }

  res.best_value = best;
  res.best_params = {best_a, best_c};
  res.converged = true;
  return res;
}

namespace {

// Kets re-projected to completeness: w_j = S^{-1/2} v_j with S the frame
// operator of the raw kets.
double oracle_objective(const AncillaEnsemble& e,
                        const std::vector<Vec>& raw_kets, int dim) {
  Mat s(dim);
  for (const Vec& v : raw_kets) s += outer(v);
  const Mat proj = inv_sqrt_psd(s, 1e-12);
  Povm p;
  p.dim = dim;
  for (const Vec& v : raw_kets) p.outcomes.push_back(outer(apply(proj, v)));
  return i_ae(e, p);
}

}  // namespace

OptResult accessible_info_oracle(const AncillaEnsemble& e,
                                 const OracleConfig& cfg) {
  if (cfg.restarts < 1)
    throw std::invalid_argument("oracle needs at least one restart");
  const int dim = e.rank;
  const int m = cfg.max_outcomes > 0 ? cfg.max_outcomes : dim + 2;
  const int nparams = 2 * dim * m;

  OptResult res;
  res.converged = true;

  auto unpack = [&](const std::vector<double>& x) {
    std::vector<Vec> kets(static_cast<size_t>(m), Vec(dim));
    int idx = 0;
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < dim; ++i) {
        kets[static_cast<size_t>(j)][i] = cd{x[static_cast<size_t>(idx)],
                                             x[static_cast<size_t>(idx + 1)]};
        idx += 2;
      }
    return kets;
  };
  auto objective = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return oracle_objective(e, unpack(x), dim);
  };

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(static_cast<size_t>(nparams));
    for (double& xi : x) xi = gauss(rng);

    double val = objective(x);
    constexpr int kMaxIters = 6000;
    double step = 0.1;  // carried across iterations, grown on success
    for (int iter = 0; iter < kMaxIters; ++iter) {
      // central-difference gradient
      std::vector<double> grad(static_cast<size_t>(nparams));
      const double h = 1e-5;
      double gnorm = 0.0;
      for (int i = 0; i < nparams; ++i) {
        std::vector<double> xp = x, xm = x;
        xp[static_cast<size_t>(i)] += h;
        xm[static_cast<size_t>(i)] -= h;
        grad[static_cast<size_t>(i)] = (objective(xp) - objective(xm)) / (2 * h);
        gnorm += grad[static_cast<size_t>(i)] * grad[static_cast<size_t>(i)];
      }
      gnorm = std::sqrt(gnorm);
      if (gnorm < 1e-12) break;

      double improvement = 0.0;
      while (step > 1e-11) {
        std::vector<double> xp = x;
        for (int i = 0; i < nparams; ++i)
          xp[static_cast<size_t>(i)] += step * grad[static_cast<size_t>(i)] / gnorm;
        const double vp = objective(xp);
        if (vp > val) {
          improvement = vp - val;
          x = std::move(xp);
          val = vp;
          step = std::min(0.5, step * 2.0);
          break;
        }
        step /= 2;
      }
      if (improvement < cfg.step_tolerance) break;
    }

    if (val > res.best_value) res.best_value = val;
  }
  return res;
}

}  // namespace tomoqkd
