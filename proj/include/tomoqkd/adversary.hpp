#ifndef TOMOQKD_ADVERSARY_HPP
#define TOMOQKD_ADVERSARY_HPP

#include <array>
#include <vector>

#include "tomoqkd/qmath.hpp"
#include "tomoqkd/source.hpp"

// Eve's side of the purification, per basis: outcome priors mu_{ak},
// ancilla Gram matrix, an explicit orthonormal-coordinate embedding of
// the ancilla kets and her conditional states given Alice's bit.

namespace tomoqkd {

// Ancilla index order is fixed as (a,k) = (0,0),(0,1),(1,0),(1,1) for the
// priors, the Gram matrix and the vectors; downstream POVM constructions
// assume it.
struct AncillaEnsemble {
  Basis basis = Basis::Z;
  std::array<double, 4> priors{};  // mu_{ak}
  Mat gram;                        // 4x4, real entries
  std::vector<Vec> vectors;        // |f_ak> embedded in dimension `rank`
  int rank = 0;

  // Overlap scalars for the basis at hand.
  double lambda = 0.0;   // z basis: <f_10|f_11>
  double lambda0 = 0.0;  // x/y basis: <f_00|f_01>
  double lambda1 = 0.0;  // x/y basis: <f_10|f_11>
  double chi = 0.0;      // x/y basis: cross overlap scale
};

struct ConditionalState {
  int k = 0;          // Alice's bit
  Mat op;             // density operator on the ancilla span
  double weight = 0;  // probability of k
};

AncillaEnsemble ensemble(const StateCoefficients& c, Basis basis);

std::array<ConditionalState, 2> conditional_states(const AncillaEnsemble& e);

// Rebuilds rho_AB from the Z ensemble (priors + Gram overlaps) and returns
// the max entrywise deviation from density_matrix_z(c).
double purification_check(const StateCoefficients& c);

}  // namespace tomoqkd

#endif  // TOMOQKD_ADVERSARY_HPP
