#include "ttqc/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ttqc/errors.hpp"
#include "ttqc/tolerances.hpp"

namespace ttqc {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim != 2 && dim != 4) throw std::invalid_argument("ComplexMatrix: dim must be 2 or 4");
  entries_.fill(cplx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(r, c));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
  return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - other(r, c)));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("operator+=: dimension mismatch");
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) (*this)(r, c) += rhs(r, c);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("operator-=: dimension mismatch");
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) (*this)(r, c) -= rhs(r, c);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) (*this)(r, c) *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator*: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int k = 0; k < a.dim(); ++k) {
      const cplx ark = a(r, k);
      for (int c = 0; c < a.dim(); ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

ComplexMatrix pauli(int mu) {
  ComplexMatrix m(2);
  switch (mu) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx{0.0, -1.0}; m(1, 0) = cplx{0.0, 1.0}; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron: both factors must be 2x2");
  ComplexMatrix out(4);
  for (int ra = 0; ra < 2; ++ra)
    for (int ca = 0; ca < 2; ++ca)
      for (int rb = 0; rb < 2; ++rb)
        for (int cb = 0; cb < 2; ++cb)
          out(2 * ra + rb, 2 * ca + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

namespace {

// One Jacobi rotation zeroing the (p,q) entry of a Hermitian matrix.
// Returns the full-size unitary so the caller can update A and V.
ComplexMatrix jacobi_rotation(const ComplexMatrix& a, int p, int q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  ComplexMatrix g = ComplexMatrix::identity(a.dim());
  if (mag == 0.0) return g;
  const cplx phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (app - aqq) / (2.0 * mag);
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  const double t = -sign / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  g(p, p) = c;
  g(p, q) = s * phase;
  g(q, p) = -s * std::conj(phase);
  g(q, q) = c;
  return g;
}

double offdiag_max(const ComplexMatrix& a) {
  double worst = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = r + 1; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c)));
  return worst;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_hermitian(tol::kHermitian))
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian within tolerance");

  const int n = m.dim();
  // symmetrize away the sub-tolerance asymmetry before iterating
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
  scale = std::max(scale, offdiag_max(a));
  const double stop = tol::kEigenOffdiag * std::max(scale, 1.0);

  for (int sweep = 0; sweep < 60 && offdiag_max(a) > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= stop) continue;
        const ComplexMatrix g = jacobi_rotation(a, p, q);
        a = g.adjoint() * a * g;
        v = v * g;
      }
  }

  EigenDecomposition out;
  out.values.resize(static_cast<size_t>(n));
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });
  out.vectors = ComplexMatrix(n);
  for (int c = 0; c < n; ++c) {
    out.values[static_cast<size_t>(c)] = a(order[static_cast<size_t>(c)], order[static_cast<size_t>(c)]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[static_cast<size_t>(c)]);
  }
  return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  EigenDecomposition eig = hermitian_eigen(m);
  for (double& lambda : eig.values) {
    if (lambda < -tol::kPsdClamp)
      throw NotPositiveSemidefiniteError("sqrt_psd: eigenvalue below -1e-10");
    lambda = lambda < 0.0 ? 0.0 : lambda;
  }
  ComplexMatrix out(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      cplx sum{0.0, 0.0};
      for (int k = 0; k < m.dim(); ++k)
        sum += eig.vectors(r, k) * std::sqrt(eig.values[static_cast<size_t>(k)]) *
               std::conj(eig.vectors(c, k));
      out(r, c) = sum;
    }
  return out;
}

bool is_density_matrix(const ComplexMatrix& m, double tolerance) {
  if (!m.is_hermitian(tolerance)) return false;
  if (std::abs(m.trace() - cplx{1.0, 0.0}) > tolerance) return false;
  ComplexMatrix h(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  const EigenDecomposition eig = hermitian_eigen(h);
  return eig.values.back() >= -tolerance;
}

}  // namespace ttqc
