#include "tomoqkd/adversary.hpp"

#include <cmath>

namespace tomoqkd {

namespace {
constexpr double kDegenerate = 1e-14;
}

AncillaEnsemble ensemble(const StateCoefficients& c, Basis basis) {
  c.validate();
  AncillaEnsemble e;
  e.basis = basis;
  e.gram = Mat::identity(4);
  const double mid = (c.beta1 + c.beta2) / 2;

  if (basis == Basis::Z) {
    e.priors = {c.alpha, c.alpha, mid + c.gamma, mid - c.gamma};
    const double denom2 =
        (c.beta1 + c.beta2) * (c.beta1 + c.beta2) - 4 * c.gamma * c.gamma;
    // denom2 > 0 whenever beta1+beta2 > 0; both betas zero cannot happen
    // (their sum is at least 1 - 2*alpha >= 1/2 for physical inputs)
    e.lambda = (c.beta1 - c.beta2) / std::sqrt(denom2);
    e.gram(2, 3) = e.lambda;
    e.gram(3, 2) = e.lambda;
  } else {
    const double w0 = (c.alpha + c.beta1) / 2;
    const double w1 = (c.alpha + c.beta2) / 2;
    e.priors = {w0, w0, w1, w1};
    // alpha + beta1 vanishes only at ratio=1, g=0, V=1, where gamma=0 and
    // the f_0k carry zero weight; pin the overlaps to the parallel-ket limit
    if (c.alpha + c.beta1 < kDegenerate) {
      e.lambda0 = 1.0;
      e.chi = 0.0;
    } else {
      e.lambda0 = (c.alpha - c.beta1) / (c.alpha + c.beta1);
      e.chi = -c.gamma /
              std::sqrt((c.alpha + c.beta1) * (c.alpha + c.beta2));
    }
    e.lambda1 = (c.alpha - c.beta2) / (c.alpha + c.beta2);
    e.gram(0, 1) = e.lambda0;
    e.gram(1, 0) = e.lambda0;
    e.gram(2, 3) = e.lambda1;
    e.gram(3, 2) = e.lambda1;
    // <f_0k'|f_1k> = chi * (-1)^(k+k'), index order (0,0),(0,1),(1,0),(1,1)
    for (int kp = 0; kp < 2; ++kp)
      for (int k = 0; k < 2; ++k) {
        const double v = e.chi * ((k + kp) % 2 == 0 ? 1.0 : -1.0);
        e.gram(kp, 2 + k) = v;
        e.gram(2 + k, kp) = v;
      }
  }

  auto emb = embed_gram(e.gram);
  e.vectors = std::move(emb.vectors);
  e.rank = emb.rank;
  return e;
}

std::array<ConditionalState, 2> conditional_states(const AncillaEnsemble& e) {
  std::array<ConditionalState, 2> out;
  for (int k = 0; k < 2; ++k) {
    const double w = e.priors[static_cast<size_t>(k)] +
                     e.priors[static_cast<size_t>(2 + k)];
    ConditionalState s;
    s.k = k;
    s.weight = w;
    s.op = Mat(e.rank);
    if (w > 0) {
      for (int a = 0; a < 2; ++a) {
        const double mu = e.priors[static_cast<size_t>(2 * a + k)];
        if (mu <= 0) continue;
        Mat p = outer(e.vectors[static_cast<size_t>(2 * a + k)]);
        p *= cd{mu / w};
        s.op += p;
      }
    }
    out[static_cast<size_t>(k)] = s;
  }
  return out;
}

double purification_check(const StateCoefficients& c) {
  const AncillaEnsemble e = ensemble(c, Basis::Z);
  // |z_k z_{k+a}> has computational index 2k + (k xor a)
  auto row = [](int a, int k) { return 2 * k + (k ^ a); };
  Mat rho(4);
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 2; ++k)
      for (int ap = 0; ap < 2; ++ap)
        for (int kp = 0; kp < 2; ++kp) {
          const double mu = e.priors[static_cast<size_t>(2 * a + k)];
          const double mup = e.priors[static_cast<size_t>(2 * ap + kp)];
          const cd overlap = e.gram(2 * ap + kp, 2 * a + k);  // <f_a'k'|f_ak>
          rho(row(a, k), row(ap, kp)) += std::sqrt(mu * mup) * overlap;
        }
  const Mat target = density_matrix_z(c);
  return (rho - target).max_abs();
}

}  // namespace tomoqkd
