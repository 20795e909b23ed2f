#include "tomoqkd/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tomoqkd {

namespace {
void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("dimension must be in [1, 4], got " +
                                std::to_string(dim));
}
}  // namespace

Vec::Vec(int dim) : dim_(dim) {
  check_dim(dim);
  v_.fill(cd{});
}

Vec& Vec::operator+=(const Vec& o) {
  for (int i = 0; i < dim_; ++i) v_[static_cast<size_t>(i)] += o[i];
  return *this;
}
Vec& Vec::operator-=(const Vec& o) {
  for (int i = 0; i < dim_; ++i) v_[static_cast<size_t>(i)] -= o[i];
  return *this;
}
Vec& Vec::operator*=(cd s) {
  for (int i = 0; i < dim_; ++i) v_[static_cast<size_t>(i)] *= s;
  return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator*(cd s, Vec a) { return a *= s; }

cd inner(const Vec& a, const Vec& b) {
  cd s{};
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(std::real(inner(a, a))); }

Mat::Mat(int dim) : dim_(dim) {
  check_dim(dim);
  a_.fill(cd{});
}

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::adjoint() const {
  Mat r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

cd Mat::trace() const {
  cd s{};
  for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
  return s;
}

double Mat::max_abs() const {
  double m = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

bool Mat::is_hermitian(double tol) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
        return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) += o(i, j);
  return *this;
}
Mat& Mat::operator-=(const Mat& o) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) -= o(i, j);
  return *this;
}
Mat& Mat::operator*=(cd s) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(cd s, Mat a) { return a *= s; }

Mat operator*(const Mat& a, const Mat& b) {
  Mat r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < a.dim(); ++k) {
      const cd aik = a(i, k);
      if (aik == cd{}) continue;
      for (int j = 0; j < a.dim(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Mat outer(const Vec& v) {
  Mat r(v.dim());
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) r(i, j) = v[i] * std::conj(v[j]);
  return r;
}

double quad_form(const Vec& f, const Mat& e) {
  cd s{};
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) s += std::conj(f[i]) * e(i, j) * f[j];
  return std::real(s);
}

Vec apply(const Mat& e, const Vec& v) {
  Vec r(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    cd s{};
    for (int j = 0; j < v.dim(); ++j) s += e(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

namespace {

double off_diag_norm(const Mat& m) {
  double s = 0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult eig_hermitian(const Mat& m) {
  if (!m.is_hermitian(1e-12))
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");

  const int n = m.dim();
  Mat h = m;
  // symmetrize exactly so rounding in the input cannot bias the sweep
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const cd avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  for (int i = 0; i < n; ++i) h(i, i) = std::real(h(i, i));

  Mat v = Mat::identity(n);
  constexpr double kConv = 1e-14;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diag_norm(h) > kConv; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cd hpq = h(p, q);
        const double apq = std::abs(hpq);
        if (apq < 1e-300) continue;
        const cd phase = hpq / apq;  // h(p,q) = apq * phase
        const double app = std::real(h(p, p));
        const double aqq = std::real(h(q, q));
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // unitary G: identity except G(p,p)=c, G(p,q)=s*phase,
        // G(q,p)=-s*conj(phase), G(q,q)=c ; update h <- G^dag h G, v <- v G
        Mat g = Mat::identity(n);
        g(p, p) = c;
        g(p, q) = s * phase;
        g(q, p) = -s * std::conj(phase);
        g(q, q) = c;
        h = g.adjoint() * h * g;
        v = v * g;
      }
  }

  EigResult res;
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> evals(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) evals[static_cast<size_t>(i)] = std::real(h(i, i));
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return evals[static_cast<size_t>(a)] >
                                       evals[static_cast<size_t>(b)]; });
  for (int idx : order) {
    res.values.push_back(evals[static_cast<size_t>(idx)]);
    Vec col(n);
    for (int i = 0; i < n; ++i) col[i] = v(i, idx);
    res.vectors.push_back(col);
  }
  return res;
}

bool is_psd(const Mat& m, double tol) {
  const auto eig = eig_hermitian(m);
  return eig.values.back() >= -tol;
}

GramEmbedding embed_gram(const Mat& g, double cutoff) {
  const auto eig = eig_hermitian(g);
  const double min_ev = eig.values.back();
  if (min_ev < -1e-10)
    throw std::invalid_argument("invalid Gram: negative eigenvalue " +
                                std::to_string(min_ev));
  int rank = 0;
  for (double ev : eig.values)
    if (ev > cutoff) ++rank;
  rank = std::max(rank, 1);

  GramEmbedding out;
  out.rank = rank;
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    Vec x(rank);
    for (int m = 0; m < rank; ++m) {
      const double ev = std::max(eig.values[static_cast<size_t>(m)], 0.0);
      x[m] = std::sqrt(ev) * std::conj(eig.vectors[static_cast<size_t>(m)][i]);
    }
    out.vectors.push_back(x);
  }
  return out;
}

Mat inv_sqrt_psd(const Mat& m, double cutoff) {
  const auto eig = eig_hermitian(m);
  Mat r(m.dim());
  for (size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= cutoff) continue;
    const double w = 1.0 / std::sqrt(eig.values[k]);
    const Mat p = outer(eig.vectors[k]);
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) r(i, j) += w * p(i, j);
  }
  return r;
}

}  // namespace tomoqkd
