#include "tomoqkd/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace tomoqkd {

namespace {
constexpr double kZeroYield = 1e-6;  // below this the yield counts as zero
}

YieldReport analyze(const SourceParams& params) {
  params.validate();
  YieldReport rep;
  rep.params = params;
  rep.coefficients = coefficients(params);

  const AncillaEnsemble ez = ensemble(rep.coefficients, Basis::Z);
  const AncillaEnsemble ex = ensemble(rep.coefficients, Basis::X);

  const OptResult rz = maximize_theta(ez);
  rep.z.basis = Basis::Z;
  rep.z.i_ab = i_ab(rep.coefficients, Basis::Z);
  rep.z.i_ae_max = rz.best_value;
  rep.z.yield = rep.z.i_ab - rep.z.i_ae_max;
  rep.z.optimal_params = rz.best_params;

  const OptResult rx = maximize_ac(ex, rep.coefficients);
  rep.x.basis = Basis::X;
  rep.x.i_ab = i_ab(rep.coefficients, Basis::X);
  rep.x.i_ae_max = rx.best_value;
  rep.x.yield = rep.x.i_ab - rep.x.i_ae_max;
  rep.x.optimal_params = rx.best_params;

  // the X and Y ensembles are the same object; the report is shared
  rep.y = rep.x;
  rep.y.basis = Basis::Y;

  rep.overall_yield = overall_yield(rep.z, rep.x, rep.y);
  rep.entangled = is_entangled(rep.coefficients).entangled;
  return rep;
}

namespace {

SourceParams with_axis(SourceParams p, Axis axis, double value) {
  switch (axis) {
    case Axis::Ratio: p.ratio = value; break;
    case Axis::G: p.g = value; break;
    case Axis::V: p.v = value; break;
    case Axis::F: p.noise = value; break;
  }
  return p;
}

double axis_value(const AxisSpec& a, int i) {
  if (a.steps <= 1) return a.min;
  if (i == a.steps - 1) return a.max;  // hit the endpoint exactly
  return a.min + (a.max - a.min) * i / (a.steps - 1);
}

int thread_cap() {
  const char* env = std::getenv("TOMOQKD_THREADS");
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (env) {
    const int n = std::atoi(env);
    if (n >= 1) hw = std::min(hw, static_cast<unsigned>(n));
  }
  return static_cast<int>(hw);
}

SweepRow make_row(const SourceParams& p) {
  const YieldReport rep = analyze(p);
  SweepRow row;
  row.params = p;
  row.i_ab_z = rep.z.i_ab;
  row.i_ae_z = rep.z.i_ae_max;
  row.yield_z = rep.z.yield;
  row.i_ab_xy = rep.x.i_ab;
  row.i_ae_xy = rep.x.i_ae_max;
  row.yield_xy = rep.x.yield;
  row.overall = rep.overall_yield;
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw std::invalid_argument("sweep needs one or two axes");
  for (const AxisSpec& a : spec.axes)
    if (a.steps < 1) throw std::invalid_argument("axis needs steps >= 1");

  std::vector<SourceParams> points;
  if (spec.axes.size() == 1) {
    const AxisSpec& a = spec.axes[0];
    for (int i = 0; i < a.steps; ++i)
      points.push_back(with_axis(spec.fixed, a.axis, axis_value(a, i)));
  } else {
    const AxisSpec& a0 = spec.axes[0];
    const AxisSpec& a1 = spec.axes[1];
    for (int i = 0; i < a0.steps; ++i)
      for (int j = 0; j < a1.steps; ++j)
        points.push_back(with_axis(
            with_axis(spec.fixed, a0.axis, axis_value(a0, i)), a1.axis,
            axis_value(a1, j)));
  }
  for (const SourceParams& p : points) p.validate();

  std::vector<SweepRow> rows(points.size());
  const int nthreads =
      std::min<int>(thread_cap(), static_cast<int>(points.size()));
  if (nthreads <= 1) {
    for (size_t i = 0; i < points.size(); ++i) rows[i] = make_row(points[i]);
  } else {
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int t = 0; t < nthreads; ++t)
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < points.size();
             i = next.fetch_add(1))
          rows[i] = make_row(points[i]);
      });
    for (auto& w : workers) w.join();
  }
  return rows;
}

namespace {

// Overall yield maximized over V on a 41-point grid with golden
// refinement around the best grid point.  The yield is smooth in V, so
// the coarse grid plus refinement locates the maximum to ~1e-6.
double max_yield_over_v(SourceParams p) {
  constexpr int kVGrid = 41;
  double best = -1.0, best_v = 0.0;
  for (int i = 0; i < kVGrid; ++i) {
    const double v = static_cast<double>(i) / (kVGrid - 1);
    p.v = v;
    const double y = analyze(p).overall_yield;
    if (y > best) {
      best = y;
      best_v = v;
    }
  }
  const double h = 1.0 / (kVGrid - 1);
  double a = std::max(0.0, best_v - h), b = std::min(1.0, best_v + h);
  constexpr double kGolden = 0.6180339887498949;
  auto f = [&](double v) {
    p.v = v;
    return analyze(p).overall_yield;
  };
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-6) {
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
  }
  return std::max(best, std::max(f1, f2));
}

}  // namespace

ThresholdResult find_threshold(const ThresholdQuery& q) {
  if (q.moving != 'v' && q.moving != 'f')
    throw std::invalid_argument("moving parameter must be 'v' or 'f'");
  if (!(q.tolerance > 0))
    throw std::invalid_argument("tolerance must be positive");

  auto yield_at = [&](double x) {
    if (q.moving == 'v') {
      SourceParams p = q.fixed;
      p.v = x;
      return analyze(p).overall_yield;
    }
    SourceParams p = q.fixed;
    p.noise = x;
    return max_yield_over_v(p);
  };

  double lo = 0.0, hi = 1.0;
  double y_lo = yield_at(lo), y_hi = yield_at(hi);
  const bool lo_zero = y_lo < kZeroYield;
  const bool hi_zero = y_hi < kZeroYield;
  if (lo_zero == hi_zero)
    throw std::runtime_error(
        "no crossing in range: overall yield is " + std::to_string(y_lo) +
        " at one end and " + std::to_string(y_hi) + " at the other");

  ThresholdResult res;
  res.low_yield = lo_zero ? y_lo : y_hi;
  res.high_yield = lo_zero ? y_hi : y_lo;
  while (hi - lo > q.tolerance) {
    const double mid = 0.5 * (lo + hi);
    const bool mid_zero = yield_at(mid) < kZeroYield;
    if (mid_zero == lo_zero)
      lo = mid;
    else
      hi = mid;
  }
  res.crossing = 0.5 * (lo + hi);
  return res;
}

}  // namespace tomoqkd
