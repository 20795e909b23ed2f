#ifndef TOMOQKD_MEASUREMENT_HPP
#define TOMOQKD_MEASUREMENT_HPP

#include <string>
#include <vector>

#include "tomoqkd/adversary.hpp"
#include "tomoqkd/qmath.hpp"

// Eve's structured POVM families on the ancilla span: the z-basis
// subspace sort followed by a rotated square-root measurement, and the
// x/y-basis 4-outcome measurement parameterized by (a, c) in the
// eigenbasis of her total state.

namespace tomoqkd {

struct Povm {
  std::vector<Mat> outcomes;        // PSD, rank-1 generically
  std::vector<std::string> labels;  // same length as outcomes
  int dim = 0;                      // span dimension the outcomes act on
};

struct ZFamilyParams {
  double theta = 0.0;  // rotation away from the square-root measurement
};

struct XYFamilyParams {
  double a_param = 0.0;  // in [-1/sqrt(2), 1/sqrt(2)]
  double c_param = 0.0;  // in [-1/sqrt(2), 1/sqrt(2)]

  double b() const;  // +sqrt(1/2 - a^2)
  double d() const;  // +sqrt(1/2 - c^2)
  void validate() const;
};

// Square-root-measurement success probability for two equiprobable pure
// states with overlap lam: (1 + sqrt(1 - lam^2)) / 2.
// Throws std::domain_error if |lam| > 1.
double srm_success(double lam);

// Two rank-1 projectors onto the orthogonal a=0 ancillas plus the
// theta-rotated square-root pair inside the a=1 subspace.
Povm z_family(const AncillaEnsemble& e, const ZFamilyParams& p);

// Orthonormal eigenbasis (g_0..g_3) of Eve's total x/y state on the ancilla
// span; kets whose eigenspace has dropped out of the span come back as zero
// vectors.  Throws std::runtime_error on an orthonormality failure beyond
// 1e-9.
std::vector<Vec> xy_g_basis(const AncillaEnsemble& e,
                            const StateCoefficients& c);

// Four rank-1 outcomes built in the g-eigenbasis of Eve's total x/y state.
// Throws std::runtime_error if the constructed g-basis fails orthonormality
// beyond 1e-9 (signals a coefficient-regime bug).
Povm xy_family(const AncillaEnsemble& e, const StateCoefficients& c,
               const XYFamilyParams& p);

// Max-norm deviation of the outcome sum from the identity on span_dim.
// Throws std::invalid_argument if an outcome fails the PSD check.
double validate(const Povm& p, int span_dim);

}  // namespace tomoqkd

#endif  // TOMOQKD_MEASUREMENT_HPP
