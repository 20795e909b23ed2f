#ifndef TOMOQKD_SOURCE_HPP
#define TOMOQKD_SOURCE_HPP

#include <array>

#include "tomoqkd/qmath.hpp"

// Two-qubit state of the entangled-photon source as a function of the
// experimental knobs: beamsplitter ratio R/T, two-photon contamination g,
// wave-packet overlap V and white-noise fraction F.

namespace tomoqkd {

struct SourceParams {
  double ratio = 1.0;  // R/T > 0
  double g = 0.0;      // equal-time second-order correlation, >= 0
  double v = 0.0;      // wave-packet overlap, in [0, 1]
  double noise = 0.0;  // white-noise fraction F, in [0, 1]

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Noise-effective coefficients of the two-qubit state.  The white-noise
// admixture (fraction F of the maximally mixed state) is folded in here
// once: identity admixture preserves the Bell-basis block structure, so
// every downstream formula applies verbatim to the effective values.
struct StateCoefficients {
  double alpha = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double gamma = 0.0;

  void validate() const;  // 2a+b1+b2=1, positivity, b1*b2 >= gamma^2
};

enum class Basis { X, Y, Z };

const char* basis_name(Basis b);

// p[k_alice][k_bob] for a common measurement basis.
struct JointDistribution {
  std::array<std::array<double, 2>, 2> p{};
};

StateCoefficients coefficients(const SourceParams& params);

// Density matrix in the computational (z) product basis, 4x4.
Mat density_matrix_z(const StateCoefficients& c);

// Density matrix in the Bell basis of the given measurement basis.
// X and Y give identical matrices.
Mat bell_matrix(const StateCoefficients& c, Basis basis);

JointDistribution joint_distribution(const StateCoefficients& c, Basis basis);

struct EntanglementResult {
  bool entangled = false;
  double min_pt_eigenvalue = 0.0;  // smallest eigenvalue of the partial transpose
};

// PPT test (exact for two qubits).
EntanglementResult is_entangled(const StateCoefficients& c);

}  // namespace tomoqkd

#endif  // TOMOQKD_SOURCE_HPP
