#ifndef TOMOQKD_QMATH_HPP
#define TOMOQKD_QMATH_HPP

#include <array>
#include <complex>
#include <vector>

// Minimal complex linear algebra for dimension <= 4: Hermitian
// eigendecomposition (cyclic Jacobi), PSD checks and Gram embedding.
// Everything here is exact-size, allocation-light and pure.

namespace tomoqkd {

using cd = std::complex<double>;

constexpr int kMaxDim = 4;

class Vec {
 public:
  Vec() : dim_(0) { v_.fill(cd{}); }
  explicit Vec(int dim);

  int dim() const { return dim_; }
  cd& operator[](int i) { return v_[static_cast<size_t>(i)]; }
  cd operator[](int i) const { return v_[static_cast<size_t>(i)]; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(cd s);

 private:
  int dim_;
  std::array<cd, kMaxDim> v_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(cd s, Vec a);

// <a|b> with the physics convention: antilinear in the first slot.
cd inner(const Vec& a, const Vec& b);
double norm(const Vec& a);

class Mat {
 public:
  Mat() : dim_(0) { a_.fill(cd{}); }
  explicit Mat(int dim);
  static Mat identity(int dim);

  int dim() const { return dim_; }
  cd& operator()(int i, int j) { return a_[static_cast<size_t>(i * dim_ + j)]; }
  cd operator()(int i, int j) const {
    return a_[static_cast<size_t>(i * dim_ + j)];
  }

  Mat adjoint() const;
  cd trace() const;
  double max_abs() const;
  bool is_hermitian(double tol = 1e-12) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cd s);

 private:
  int dim_;
  std::array<cd, kMaxDim * kMaxDim> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(cd s, Mat a);

// |v><v|
Mat outer(const Vec& v);
// Re <f| E |f>  (imaginary part vanishes for Hermitian E)
double quad_form(const Vec& f, const Mat& e);
// E |v>
Vec apply(const Mat& e, const Vec& v);

struct EigResult {
  std::vector<double> values;   // descending
  std::vector<Vec> vectors;     // orthonormal, same order
};

// Cyclic Jacobi on the complex Hermitian matrix; converges when the
// off-diagonal Frobenius norm drops below 1e-14.
// Throws std::invalid_argument on non-Hermitian input.
EigResult eig_hermitian(const Mat& m);

bool is_psd(const Mat& m, double tol = 1e-9);

struct GramEmbedding {
  std::vector<Vec> vectors;  // one per Gram row, living in dimension `rank`
  int rank = 0;
};

// Realizes vectors whose pairwise inner products reproduce g:
// inner(vectors[i], vectors[j]) == g(i, j).  Uses the eigendecomposition
// (sqrt-eigenvalue scaling) so rank-deficient Gram matrices embed cleanly.
// Throws std::invalid_argument ("invalid Gram ...") if g has an eigenvalue
// below -1e-10.
GramEmbedding embed_gram(const Mat& g, double cutoff = 1e-12);

// Pseudo inverse square root of a PSD matrix; eigenvalues below cutoff are
// dropped (pseudo-inverted to zero).
Mat inv_sqrt_psd(const Mat& m, double cutoff = 1e-12);

}  // namespace tomoqkd

#endif  // TOMOQKD_QMATH_HPP
