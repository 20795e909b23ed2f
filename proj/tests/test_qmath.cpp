#include <doctest.h>

#include <cmath>
#include <random>

#include "tomoqkd/qmath.hpp"
#include "tomoqkd/source.hpp"

using namespace tomoqkd;

namespace {

Mat random_hermitian(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = u(rng);
    for (int j = i + 1; j < dim; ++j) {
      const cd v{u(rng), u(rng)};
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

Mat reconstruct(const EigResult& e, int dim) {
  Mat r(dim);
  for (size_t k = 0; k < e.values.size(); ++k) {
    Mat p = outer(e.vectors[k]);
    p *= cd{e.values[k]};
    r += p;
  }
  return r;
}

}  // namespace

TEST_CASE("eig_hermitian: identity") {
  const auto e = eig_hermitian(Mat::identity(2));
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(e.vectors[0], e.vectors[1])) < 1e-10);
}

TEST_CASE("eig_hermitian: diagonal case") {
  Mat m(4);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  const auto e = eig_hermitian(m);
  CHECK(e.values[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.values[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e.values[3] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian: 2x2 closed form 1 +- |lambda|") {
  // the a=1 Gram block at lambda = -V = -0.9
  Mat m(2);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(0, 1) = -0.9;
  m(1, 0) = -0.9;
  const auto e = eig_hermitian(m);
  CHECK(e.values[0] == doctest::Approx(1.9).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("eig_hermitian: rejects non-Hermitian input") {
  Mat m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("eig_hermitian: reconstruction and orthonormality, random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    const Mat m = random_hermitian(rng, dim);
    const auto e = eig_hermitian(m);
    CHECK((reconstruct(e, dim) - m).max_abs() < 1e-10);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const double target = i == j ? 1.0 : 0.0;
        CHECK(std::abs(inner(e.vectors[static_cast<size_t>(i)],
                             e.vectors[static_cast<size_t>(j)]) -
                       cd{target}) < 1e-10);
      }
  }
}

TEST_CASE("embed_gram: identity gives orthonormal vectors") {
  const auto emb = embed_gram(Mat::identity(2));
  CHECK(emb.rank == 2);
  CHECK(std::abs(inner(emb.vectors[0], emb.vectors[1])) < 1e-10);
  CHECK(norm(emb.vectors[0]) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("embed_gram: perfectly overlapping kets collapse to rank 1") {
  Mat g(2);
  g(0, 0) = g(0, 1) = g(1, 0) = g(1, 1) = 1.0;
  const auto emb = embed_gram(g);
  CHECK(emb.rank == 1);
  CHECK(std::abs(inner(emb.vectors[0], emb.vectors[1]) - cd{1.0}) < 1e-10);
}

TEST_CASE("embed_gram: x-basis Gram at (1.1, 0.1, 0.9)") {
  const StateCoefficients c = coefficients({1.1, 0.1, 0.9, 0.0});
  const double l0 = (c.alpha - c.beta1) / (c.alpha + c.beta1);
  const double l1 = (c.alpha - c.beta2) / (c.alpha + c.beta2);
  const double chi =
      -c.gamma / std::sqrt((c.alpha + c.beta1) * (c.alpha + c.beta2));
  CHECK(l0 == doctest::Approx(0.313433).epsilon(1e-4));
  CHECK(l1 == doctest::Approx(-0.809935).epsilon(1e-4));
  CHECK(chi == doctest::Approx(-0.119232).epsilon(1e-4));

  Mat g = Mat::identity(4);
  g(0, 1) = g(1, 0) = l0;
  g(2, 3) = g(3, 2) = l1;
  for (int kp = 0; kp < 2; ++kp)
    for (int k = 0; k < 2; ++k)
      g(kp, 2 + k) = g(2 + k, kp) = chi * ((k + kp) % 2 == 0 ? 1.0 : -1.0);

  const auto emb = embed_gram(g);
  CHECK(emb.rank == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::abs(inner(emb.vectors[static_cast<size_t>(i)],
                           emb.vectors[static_cast<size_t>(j)]) -
                     g(i, j)) < 1e-10);
}

TEST_CASE("embed_gram: rejects indefinite input") {
  Mat g(2);
  g(0, 0) = 1.0;
  g(1, 1) = -0.5;
  CHECK_THROWS_WITH_AS(embed_gram(g), doctest::Contains("invalid Gram"),
                       std::invalid_argument);
}

TEST_CASE("embed_gram round trip on random PSD matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    const Mat h = random_hermitian(rng, dim);
    const Mat psd = h * h.adjoint();  // PSD by construction
    const auto emb = embed_gram(psd);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        CHECK(std::abs(inner(emb.vectors[static_cast<size_t>(i)],
                             emb.vectors[static_cast<size_t>(j)]) -
                       psd(i, j)) < 1e-9);
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(Mat::identity(4)));
  Mat m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -0.001;
  CHECK_FALSE(is_psd(m, 1e-9));
  const StateCoefficients c = coefficients({1.1, 0.1, 0.9, 0.0});
  CHECK(is_psd(density_matrix_z(c)));
}

TEST_CASE("trace-1 PSD eigenvalues sum to one") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Mat h = random_hermitian(rng, 4);
    Mat psd = h * h.adjoint();
    psd *= cd{1.0 / std::real(psd.trace())};
    const auto e = eig_hermitian(psd);
    double sum = 0;
    for (double v : e.values) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("inv_sqrt_psd inverts the square root on the support") {
  Mat s(2);
  s(0, 0) = 1.0;
  s(1, 1) = 1.0;
  s(0, 1) = 0.6;
  s(1, 0) = 0.6;
  const Mat r = inv_sqrt_psd(s);
  const Mat check = r * s * r;  // should be the identity on the support
  CHECK((check - Mat::identity(2)).max_abs() < 1e-10);
}
