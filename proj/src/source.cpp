#include "tomoqkd/source.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tomoqkd {

void SourceParams::validate() const {
  if (!(ratio > 0) || !std::isfinite(ratio))
    throw std::invalid_argument("ratio must be > 0, got " +
                                std::to_string(ratio));
  if (!(g >= 0) || !std::isfinite(g))
    throw std::invalid_argument("g must be >= 0, got " + std::to_string(g));
  if (!(v >= 0 && v <= 1))
    throw std::invalid_argument("v must be in [0, 1], got " +
                                std::to_string(v));
  if (!(noise >= 0 && noise <= 1))
    throw std::invalid_argument("noise must be in [0, 1], got " +
                                std::to_string(noise));
}

void StateCoefficients::validate() const {
  if (std::abs(2 * alpha + beta1 + beta2 - 1.0) > 1e-12)
    throw std::invalid_argument("coefficients do not sum to one");
  if (alpha < 0 || beta1 < 0 || beta2 < 0)
    throw std::invalid_argument("negative state coefficient");
  if (beta1 * beta2 - gamma * gamma < -1e-12)
    throw std::invalid_argument("beta1*beta2 < gamma^2 (state not PSD)");
}

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::X: return "x";
    case Basis::Y: return "y";
    case Basis::Z: return "z";
  }
  return "?";
}

StateCoefficients coefficients(const SourceParams& params) {
  params.validate();
  const double r = params.ratio + 1.0 / params.ratio;
  const double delta = params.ratio - 1.0 / params.ratio;
  const double f = params.noise;

  StateCoefficients c;
  c.alpha = 2 * params.g / (r + 4 * params.g);
  c.beta1 = (r - 2 * params.v) / (2 * r + 8 * params.g);
  c.beta2 = (r + 2 * params.v) / (2 * r + 8 * params.g);
  c.gamma = delta / (2 * r + 8 * params.g);

  c.alpha = (1 - f) * c.alpha + f / 4;
  c.beta1 = (1 - f) * c.beta1 + f / 4;
  c.beta2 = (1 - f) * c.beta2 + f / 4;
  c.gamma = (1 - f) * c.gamma;

  c.validate();
  return c;
}

Mat density_matrix_z(const StateCoefficients& c) {
  Mat m(4);
  const double mid = (c.beta1 + c.beta2) / 2;
  m(0, 0) = c.alpha;
  m(1, 1) = mid + c.gamma;
  m(2, 2) = mid - c.gamma;
  m(3, 3) = c.alpha;
  m(1, 2) = (c.beta1 - c.beta2) / 2;
  m(2, 1) = (c.beta1 - c.beta2) / 2;
  return m;
}

Mat bell_matrix(const StateCoefficients& c, Basis basis) {
  Mat m(4);
  if (basis == Basis::Z) {
    m(0, 0) = c.alpha;
    m(1, 1) = c.alpha;
    m(2, 2) = c.beta1;
    m(3, 3) = c.beta2;
    m(2, 3) = c.gamma;
    m(3, 2) = c.gamma;
  } else {
    m(0, 0) = c.alpha;
    m(1, 1) = c.beta1;
    m(2, 2) = c.alpha;
    m(3, 3) = c.beta2;
    m(1, 3) = -c.gamma;
    m(3, 1) = -c.gamma;
  }
  return m;
}

JointDistribution joint_distribution(const StateCoefficients& c, Basis basis) {
  JointDistribution d;
  const double mid = (c.beta1 + c.beta2) / 2;
  if (basis == Basis::Z) {
    d.p[0][0] = c.alpha;
    d.p[0][1] = mid + c.gamma;
    d.p[1][0] = mid - c.gamma;
    d.p[1][1] = c.alpha;
  } else {
    const double same = (c.alpha + c.beta1) / 2;
    const double diff = (c.alpha + c.beta2) / 2;
    d.p[0][0] = same;
    d.p[1][1] = same;
    d.p[0][1] = diff;
    d.p[1][0] = diff;
  }
  return d;
}

EntanglementResult is_entangled(const StateCoefficients& c) {
  const Mat rho = density_matrix_z(c);
  // partial transpose on the second qubit: index (2i+a, 2j+b) -> (2i+b, 2j+a)
  Mat pt(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          pt(2 * i + a, 2 * j + b) = rho(2 * i + b, 2 * j + a);
  const auto eig = eig_hermitian(pt);
  EntanglementResult res;
  res.min_pt_eigenvalue = eig.values.back();
  res.entangled = res.min_pt_eigenvalue < -1e-10;
  return res;
}

}  // namespace tomoqkd
