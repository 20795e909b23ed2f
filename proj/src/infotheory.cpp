#include "tomoqkd/infotheory.hpp"

#include <cmath>
#include <stdexcept>

namespace tomoqkd {

namespace {
constexpr double kClamp = 1e-15;  // below this a probability counts as zero

double plogp(double p) {
  if (p < kClamp) return 0.0;
  return p * std::log2(p);
}
}  // namespace

double entropy(std::span<const double> dist) {
  double sum = 0.0, h = 0.0;
  for (double p : dist) {
    if (p < -kClamp)
      throw std::invalid_argument("entropy: negative probability");
    sum += p;
    h -= plogp(p);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("entropy: distribution does not sum to one");
  return h;
}

double binary_entropy(double p) { return -plogp(p) - plogp(1.0 - p); }

double mutual_information(const std::vector<std::vector<double>>& joint) {
  const size_t rows = joint.size();
  const size_t cols = rows ? joint[0].size() : 0;
  std::vector<double> row_m(rows, 0.0), col_m(cols, 0.0);
  double h_joint = 0.0, total = 0.0;
  for (size_t i = 0; i < rows; ++i) {
    if (joint[i].size() != cols)
      throw std::invalid_argument("mutual_information: ragged joint");
    for (size_t j = 0; j < cols; ++j) {
      const double p = joint[i][j];
      if (p < -kClamp)
        throw std::invalid_argument("mutual_information: negative entry");
      row_m[i] += p;
      col_m[j] += p;
      total += p;
      h_joint -= plogp(p);
    }
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("mutual_information: joint does not sum to one");
  double h_rows = 0.0, h_cols = 0.0;
  for (double p : row_m) h_rows -= plogp(p);
  for (double p : col_m) h_cols -= plogp(p);
  return h_rows + h_cols - h_joint;
}

double i_ab(const StateCoefficients& c, Basis basis) {
  const JointDistribution d = joint_distribution(c, basis);
  return mutual_information({{d.p[0][0], d.p[0][1]}, {d.p[1][0], d.p[1][1]}});
}

double i_ae(const AncillaEnsemble& e, const Povm& p) {
  if (p.dim != e.rank)
    throw std::invalid_argument("i_ae: POVM dimension does not match span");
  const size_t n = p.outcomes.size();
  std::vector<std::vector<double>> joint(2, std::vector<double>(n, 0.0));
  for (size_t j = 0; j < n; ++j)
    for (int a = 0; a < 2; ++a)
      for (int k = 0; k < 2; ++k) {
        const double mu = e.priors[static_cast<size_t>(2 * a + k)];
        if (mu <= 0) continue;
        const double pr =
            quad_form(e.vectors[static_cast<size_t>(2 * a + k)], p.outcomes[j]);
        joint[static_cast<size_t>(k)][j] += mu * std::max(pr, 0.0);
      }
  return mutual_information(joint);
}

double overall_yield(const BasisReport& z, const BasisReport& x,
                     const BasisReport& y) {
  return (std::max(z.yield, 0.0) + std::max(x.yield, 0.0) +
          std::max(y.yield, 0.0)) /
         3.0;
}

}  // namespace tomoqkd
