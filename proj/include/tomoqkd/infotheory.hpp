#ifndef TOMOQKD_INFOTHEORY_HPP
#define TOMOQKD_INFOTHEORY_HPP

#include <array>
#include <span>
#include <vector>

#include "tomoqkd/adversary.hpp"
#include "tomoqkd/measurement.hpp"
#include "tomoqkd/source.hpp"

// Shannon entropy and mutual-information kernels plus the per-basis
// Csiszar-Korner yield bookkeeping.  All quantities are in bits.

namespace tomoqkd {

// -sum p log2 p.  Throws std::invalid_argument on a negative entry or a
// sum off from one by more than 1e-9.
double entropy(std::span<const double> dist);

double binary_entropy(double p);

// H(rows) + H(cols) - H(joint), any shape.
double mutual_information(const std::vector<std::vector<double>>& joint);

double i_ab(const StateCoefficients& c, Basis basis);

// Mutual information between Alice's bit and Eve's POVM outcome, from the
// joint p(k, j) = sum_a mu_ak <f_ak| E_j |f_ak>.  Built from the full
// 4-ancilla ensemble; any subspace sorting is already encoded in the POVM.
double i_ae(const AncillaEnsemble& e, const Povm& p);

struct BasisReport {
  Basis basis = Basis::Z;
  double i_ab = 0.0;
  double i_ae_max = 0.0;
  double yield = 0.0;  // i_ab - i_ae_max
  // z basis: {theta, 0}; x/y basis: {a_param, c_param}
  std::array<double, 2> optimal_params{};
};

struct YieldReport {
  SourceParams params;
  StateCoefficients coefficients;
  BasisReport z, x, y;
  double overall_yield = 0.0;
  bool entangled = false;
};

// Equally-weighted average of the positive per-basis yields.
double overall_yield(const BasisReport& z, const BasisReport& x,
                     const BasisReport& y);

}  // namespace tomoqkd

#endif  // TOMOQKD_INFOTHEORY_HPP
