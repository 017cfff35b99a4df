#pragma once

// Spin density matrix of a top-antitop pair as a function of the production
// kinematics (velocity beta, scattering angle cosine z), for the two leading
// production channels.  Two independent construction routes are provided:
// correlation coefficients + block diagonalization, and the direct closed
// forms for the density-matrix entries.  Both yield the same X-shaped state.

#include <complex>

#include "ttqc/qmat.hpp"

namespace ttqc {

enum class ProductionChannel { GluonFusion, QuarkAnnihilation };

// The transcribed closed forms for the gluon-fusion correlation coefficients
// are not self-consistent: four beta powers are one power of beta^2 too high,
// which makes the coefficient route disagree with the direct entry formulas.
// Corrected (the default) lowers those four powers, after which the two
// routes agree identically; AsPrinted keeps the literal transcription.
enum class GluonCoefficientVariant { Corrected, AsPrinted };

struct KinematicPoint {
  double beta;  // top velocity in [0, 1]
  double z;     // cos(theta) in [-1, 1]

  KinematicPoint(double beta, double z);
  static KinematicPoint from_angle(double beta, double theta);
};

// beta = sqrt(1 - 4 m_top^2 / m_inv^2); throws BelowThresholdError for
// m_inv < 2 m_top.
double beta_from_masses(double m_top, double m_inv);

struct SpinCorrelationCoefficients {
  double c_kk, c_kr, c_nn, c_rr;
};

struct DiagonalCorrelations {
  double c1, c2, c3;  // c1 >= c2 by construction
};

// Six independent entries of a two-qubit X-shaped density matrix in the
// fixed basis.  r22 and r33 are kept separate because teleported outputs
// are asymmetric; channel resource states always have r22 == r33.
struct XState {
  double r11, r22, r33, r44;
  cplx r14, r23;

  // Validates trace, diagonal non-negativity and the X-structure PSD
  // conditions; throws UnphysicalCorrelationsError otherwise.
  static XState validated(double r11, double r22, double r33, double r44, cplx r14, cplx r23);

  ComplexMatrix to_dense() const;
};

SpinCorrelationCoefficients correlation_coefficients(
    ProductionChannel channel, const KinematicPoint& k,
    GluonCoefficientVariant variant = GluonCoefficientVariant::Corrected);

DiagonalCorrelations diagonalize(const SpinCorrelationCoefficients& c);

XState xstate_from_diagonal(const DiagonalCorrelations& d);

XState xstate_direct(ProductionChannel channel, const KinematicPoint& k);

}  // namespace ttqc
