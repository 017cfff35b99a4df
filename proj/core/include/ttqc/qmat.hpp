#pragma once

// Minimal dense complex-matrix kernel for 2x2 and 4x4 matrices: products,
// Kronecker products, Hermitian eigendecomposition and PSD square roots.
// Basis ordering for 4x4 matrices is fixed globally:
//   index 0 <-> |00>, 1 <-> |01>, 2 <-> |10>, 3 <-> |11>.

#include <array>
#include <complex>
#include <vector>

namespace ttqc {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(2) { entries_.fill(cplx{0.0, 0.0}); }
  explicit ComplexMatrix(int dim);

  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * 4 + c]; }
  const cplx& operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * 4 + c]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

  bool is_hermitian(double tolerance) const;
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int dim_;                       // 2 or 4
  std::array<cplx, 16> entries_;  // row-major, only dim*dim used
};

// Pauli matrices: pauli(0) = I, pauli(1) = sigma_x, pauli(2) = sigma_y,
// pauli(3) = sigma_z.
ComplexMatrix pauli(int mu);

// Kronecker product of two 2x2 matrices in the fixed basis ordering.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // columns, matching order
};

// Cyclic complex Jacobi diagonalization.  Input must be Hermitian within
// tol::kHermitian.  Reconstruction error is below tol::kEigenReconstruct.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

// Hermitian PSD square root.  Eigenvalues in [-tol::kPsdClamp, 0) are
// clamped to zero; anything lower raises NotPositiveSemidefiniteError.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

// True iff Hermitian within tol, trace within tol of 1, and the smallest
// eigenvalue is >= -tol.  Never throws.
bool is_density_matrix(const ComplexMatrix& m, double tolerance);

}  // namespace ttqc
