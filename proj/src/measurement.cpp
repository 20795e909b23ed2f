#include "tomoqkd/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace tomoqkd {

namespace {
const double kHalfRoot = 1.0 / std::sqrt(2.0);
constexpr double kGammaSwitch = 1e-10;  // g-basis degeneracy switchover
// Vanished-eigenket threshold.  Genuine degeneracies produce raw kets of
// norm ~1e-16 (exact cancellations up to rounding), while the smallest
// surviving combinations just above the gamma switchover have norm ~gamma
// ~1e-10, so the cutoff sits well between the two scales.
constexpr double kZeroNorm = 1e-12;
}  // namespace

double XYFamilyParams::b() const {
  return std::sqrt(std::max(0.5 - a_param * a_param, 0.0));
}
double XYFamilyParams::d() const {
  return std::sqrt(std::max(0.5 - c_param * c_param, 0.0));
}
void XYFamilyParams::validate() const {
  if (std::abs(a_param) > kHalfRoot + 1e-12 ||
      std::abs(c_param) > kHalfRoot + 1e-12)
    throw std::invalid_argument("xy family parameters must lie in [-1/sqrt(2), 1/sqrt(2)]");
}

double srm_success(double lam) {
  if (std::abs(lam) > 1.0 + 1e-12)
    throw std::domain_error("srm_success: |overlap| > 1");
  lam = std::min(std::abs(lam), 1.0);
  return 0.5 * (1.0 + std::sqrt(1.0 - lam * lam));
}

Povm z_family(const AncillaEnsemble& e, const ZFamilyParams& p) {
  if (e.basis != Basis::Z)
    throw std::invalid_argument("z_family needs a Z-basis ensemble");

  const Vec& f00 = e.vectors[0];
  const Vec& f01 = e.vectors[1];
  const Vec& f10 = e.vectors[2];
  Vec f11 = e.vectors[3];

  // Canonical sign: the square-root measurement is defined by the
  // rho^(-1/2) weighting, which is blind to ket signs.  Flipping f_11 when
  // the overlap is negative reproduces the textbook kets (and the stated
  // conditional probabilities) for either sign of lambda.
  double lam = std::real(inner(f10, f11));
  if (lam < 0) {
    f11 *= cd{-1.0};
    lam = -lam;
  }

  Mat s2(2);
  s2(0, 0) = 1.0;
  s2(1, 1) = 1.0;
  s2(0, 1) = lam;
  s2(1, 0) = lam;
  const Mat si = inv_sqrt_psd(s2);  // pseudo-inverse handles |lambda| = 1

  Vec w0 = cd{si(0, 0)} * f10 + cd{si(0, 1)} * f11;
  Vec w1 = cd{si(1, 0)} * f10 + cd{si(1, 1)} * f11;

  const double ct = std::cos(p.theta), st = std::sin(p.theta);
  const Vec wt0 = cd{ct} * w0 - cd{st} * w1;
  const Vec wt1 = cd{st} * w0 + cd{ct} * w1;

  Povm out;
  out.dim = e.rank;
  out.outcomes = {outer(f00), outer(f01), outer(wt0), outer(wt1)};
  out.labels = {"f00", "f01", "w10", "w11"};
  return out;
}

std::vector<Vec> xy_g_basis(const AncillaEnsemble& e,
                            const StateCoefficients& c) {
  if (e.basis == Basis::Z)
    throw std::invalid_argument("xy_g_basis needs an X/Y-basis ensemble");

  const Vec& f00 = e.vectors[0];
  const Vec& f01 = e.vectors[1];
  const Vec& f10 = e.vectors[2];
  const Vec& f11 = e.vectors[3];

  const Vec sum0 = f00 + f01;
  const Vec sum1 = f10 + f11;
  const Vec diff0 = f00 - f01;
  const Vec diff1 = f10 - f11;

  auto normalized_or_zero = [&](const Vec& v) {
    const double n = norm(v);
    if (n < kZeroNorm) return Vec(e.rank);  // eigenket vanished from the span
    return cd{1.0 / n} * v;
  };

  std::vector<Vec> g(4, Vec(e.rank));
  g[0] = normalized_or_zero(sum0);
  g[1] = normalized_or_zero(sum1);
  if (std::abs(c.gamma) < kGammaSwitch) {
    g[2] = normalized_or_zero(diff0);
    g[3] = normalized_or_zero(diff1);
  } else {
    // kappa_+ * kappa_- = -4 gamma^2 exactly; computing the smaller root
    // from that product avoids the cancellation that otherwise destroys
    // the g2/g3 orthogonality for tiny gamma.
    const double s = c.beta2 - c.beta1;
    const double root = std::sqrt(s * s + 4 * c.gamma * c.gamma);
    double kappa_p, kappa_m;
    if (s >= 0) {
      kappa_p = s + root;
      kappa_m = -4 * c.gamma * c.gamma / kappa_p;
    } else {
      kappa_m = s - root;
      kappa_p = -4 * c.gamma * c.gamma / kappa_m;
    }
    const double eta_x =
        2 * c.gamma * std::sqrt((c.alpha + c.beta2) / (c.alpha + c.beta1));
    g[2] = normalized_or_zero(cd{kappa_p} * diff0 + cd{eta_x} * diff1);
    g[3] = normalized_or_zero(cd{kappa_m} * diff0 + cd{eta_x} * diff1);
  }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (norm(g[static_cast<size_t>(i)]) < 0.5 ||
          norm(g[static_cast<size_t>(j)]) < 0.5)
        continue;  // vanished kets carry no orthonormality requirement
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(inner(g[static_cast<size_t>(i)], g[static_cast<size_t>(j)]) -
                   cd{target}) > 1e-9)
        throw std::runtime_error("xy_family: g-basis failed orthonormality");
    }
  return g;
}

Povm xy_family(const AncillaEnsemble& e, const StateCoefficients& c,
               const XYFamilyParams& p) {
  p.validate();
  const std::vector<Vec> g = xy_g_basis(e, c);

  const double a = p.a_param, b = p.b(), cc = p.c_param, d = p.d();
  const double m[4][4] = {{-a, a, b, b},
                          {b, -b, a, a},
                          {cc, cc, -d, d},
                          {d, d, cc, -cc}};
  Povm out;
  out.dim = e.rank;
  for (int j = 0; j < 4; ++j) {
    Vec w(e.rank);
    for (int i = 0; i < 4; ++i) w += cd{m[i][j]} * g[static_cast<size_t>(i)];
    out.outcomes.push_back(outer(w));
    out.labels.push_back("w" + std::to_string(j));
  }
  return out;
}

double validate(const Povm& p, int span_dim) {
  Mat sum(span_dim);
  for (const Mat& e : p.outcomes) {
    if (!is_psd(e, 1e-10))
      throw std::invalid_argument("POVM outcome is not PSD");
    sum += e;
  }
  return (sum - Mat::identity(span_dim)).max_abs();
}

}  // namespace tomoqkd
