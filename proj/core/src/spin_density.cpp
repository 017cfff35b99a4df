#include "ttqc/spin_density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ttqc/errors.hpp"
#include "ttqc/tolerances.hpp"

namespace ttqc {

KinematicPoint::KinematicPoint(double beta_, double z_) : beta(beta_), z(z_) {
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("KinematicPoint: beta must lie in [0, 1]");
  if (!(z >= -1.0 && z <= 1.0))
    throw std::invalid_argument("KinematicPoint: z must lie in [-1, 1]");
}

KinematicPoint KinematicPoint::from_angle(double beta, double theta) {
  return KinematicPoint(beta, std::cos(theta));
}

double beta_from_masses(double m_top, double m_inv) {
  if (!(m_top > 0.0)) throw std::invalid_argument("beta_from_masses: m_top must be positive");
  if (m_inv < 2.0 * m_top)
    throw BelowThresholdError("beta_from_masses: invariant mass below 2*m_top");
  const double ratio = 2.0 * m_top / m_inv;
  return std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
}

XState XState::validated(double r11, double r22, double r33, double r44, cplx r14, cplx r23) {
  const double trace = r11 + r22 + r33 + r44;
  if (std::abs(trace - 1.0) > tol::kTraceOne)
    throw UnphysicalCorrelationsError("XState: trace deviates from 1 by " +
                                      std::to_string(trace - 1.0));
  for (double d : {r11, r22, r33, r44})
    if (d < -tol::kDiagNonneg)
      throw UnphysicalCorrelationsError("XState: negative diagonal entry " + std::to_string(d));
  const double d11 = std::max(0.0, r11);
  const double d22 = std::max(0.0, r22);
  const double d33 = std::max(0.0, r33);
  const double d44 = std::max(0.0, r44);
  if (std::abs(r14) > std::sqrt(d11 * d44) + tol::kXStatePsd)
    throw UnphysicalCorrelationsError("XState: |r14| exceeds sqrt(r11*r44)");
  if (std::abs(r23) > std::sqrt(d22 * d33) + tol::kXStatePsd)
    throw UnphysicalCorrelationsError("XState: |r23| exceeds sqrt(r22*r33)");
  return XState{r11, r22, r33, r44, r14, r23};
}

ComplexMatrix XState::to_dense() const {
  ComplexMatrix m(4);
  m(0, 0) = r11;
  m(1, 1) = r22;
  m(2, 2) = r33;
  m(3, 3) = r44;
  m(0, 3) = r14;
  m(3, 0) = std::conj(r14);
  m(1, 2) = r23;
  m(2, 1) = std::conj(r23);
  return m;
}

namespace {

SpinCorrelationCoefficients coefficients_qq(const KinematicPoint& k) {
  const double b2 = k.beta * k.beta;
  const double z = k.z;
  const double z2 = z * z;
  const double u = std::sqrt(std::max(0.0, 1.0 - b2));
  const double w = -2.0 + b2 + 2.0 * u;
  const double den = 2.0 - b2 * (1.0 - z2);
  return {
      (-1.0 + z2) * (-b2 + 2.0 * z2 * w) / den,
      -2.0 * z * std::sqrt(std::max(0.0, 1.0 - z2)) * (1.0 - b2 - u + z2 * w) / den,
      (-1.0 + z2) * b2 / den,
      (2.0 - b2 - 2.0 * z2 * z2 * w + z2 * (-4.0 + 3.0 * b2 + 4.0 * u)) / den,
  };
}

SpinCorrelationCoefficients coefficients_gg(const KinematicPoint& k,
                                            GluonCoefficientVariant variant) {
  const double b2 = k.beta * k.beta;
  const double b4 = b2 * b2;
  const double z = k.z;
  const double z2 = z * z;
  const double z4 = z2 * z2;
  const double z6 = z4 * z2;
  const double u = std::sqrt(std::max(0.0, 1.0 - b2));
  // the four beta powers that differ between the two variants
  const bool corrected = variant == GluonCoefficientVariant::Corrected;
  const double den_pow = corrected ? b2 : b4;
  const double kk_pow = corrected ? b2 : b4;
  const double kr_pow = corrected ? b2 : b4;
  const double rr_pow = corrected ? b4 : b4 * b2;

  const double den = 2.0 - 2.0 * z4 * b4 + 4.0 * (-1.0 + z2) * den_pow * (-1.0 + b2);
  if (std::abs(den) < tol::kDegenerateKinematics)
    throw DegenerateKinematicsError("gluon-fusion coefficients: denominator vanishes");

  const double nkk = -2.0 + 4.0 * b2 - 2.0 * (2.0 - 2.0 * z2 + z4) * b4 +
                     4.0 * (1.0 - z2) * b2 *
                         (-1.0 + z4 * kk_pow + 2.0 * z2 * (-1.0 + z2) * u -
                          2.0 * (-1.0 + z2) * (z2 + b2));
  const double nkr = 4.0 * z * std::sqrt(std::max(0.0, 1.0 - z2)) * b2 *
                     (-2.0 + 2.0 * b2 + u + z2 * (3.0 - 2.0 * b2 - 3.0 * u) +
                      z4 * (-2.0 + kr_pow + 2.0 * u));
  const double nnn = -2.0 + 4.0 * b2 - 2.0 * (2.0 - 2.0 * z2 + z4) * b4;
  const double nrr = -2.0 - 2.0 * (2.0 - 6.0 * z2 + 5.0 * z4) * b4 + 4.0 * z6 * rr_pow +
                     8.0 * (-1.0 + z2) * b2 * (-1.0 + z2 * (-1.0 + z2) * (-1.0 + u));
  return {nkk / den, nkr / den, nnn / den, nrr / den};
}

}  // namespace

SpinCorrelationCoefficients correlation_coefficients(ProductionChannel channel,
                                                     const KinematicPoint& k,
                                                     GluonCoefficientVariant variant) {
  return channel == ProductionChannel::QuarkAnnihilation ? coefficients_qq(k)
                                                         : coefficients_gg(k, variant);
}

DiagonalCorrelations diagonalize(const SpinCorrelationCoefficients& c) {
  const double gap = std::sqrt((c.c_kk - c.c_rr) * (c.c_kk - c.c_rr) + 4.0 * c.c_kr * c.c_kr);
  return {(c.c_kk + c.c_rr + gap) / 2.0, (c.c_kk + c.c_rr - gap) / 2.0, c.c_nn};
}

XState xstate_from_diagonal(const DiagonalCorrelations& d) {
  return XState::validated((1.0 + d.c3) / 4.0, (1.0 - d.c3) / 4.0, (1.0 - d.c3) / 4.0,
                           (1.0 + d.c3) / 4.0, (d.c1 - d.c2) / 4.0, (d.c1 + d.c2) / 4.0);
}

namespace {

XState direct_qq(const KinematicPoint& k) {
  const double b2 = k.beta * k.beta;
  const double z2 = k.z * k.z;
  const double den = 4.0 + 2.0 * (-1.0 + z2) * b2;
  const double num = 1.0 + (-1.0 + z2) * b2;
  return XState::validated(num / den, 1.0 / den, 1.0 / den, num / den,
                           std::sqrt(num * num) / den, 1.0 / den);
}

XState direct_gg(const KinematicPoint& k) {
  const double b2 = k.beta * k.beta;
  const double b4 = b2 * b2;
  const double z2 = k.z * k.z;
  const double z4 = z2 * z2;
  const double z6 = z4 * z2;
  const double den = -2.0 + 4.0 * (-1.0 + z2) * b2 + 2.0 * (2.0 - 2.0 * z2 + z4) * b4;
  if (std::abs(den) < tol::kDegenerateKinematics)
    throw DegenerateKinematicsError("gluon-fusion state: denominator vanishes");
  const double r11 = b2 * (-2.0 + z2 + (2.0 - 2.0 * z2 + z4) * b2) / den;
  const double quartic = 4.0 - 8.0 * z2 + 5.0 * z4 +
                         2.0 * (-4.0 + 8.0 * z2 - 6.0 * z4 + z6) * b2 +
                         (2.0 - 2.0 * z2 + z4) * (2.0 - 2.0 * z2 + z4) * b4;
  const double r14 = -std::sqrt(std::max(0.0, b4 * quartic)) / den;
  const double r22 = (-1.0 + z2 * b2) / den;
  const double r23 = (1.0 + (-2.0 + z2) * b2) / den;
  return XState::validated(r11, r22, r22, r11, r14, r23);
}

}  // namespace

XState xstate_direct(ProductionChannel channel, const KinematicPoint& k) {
  return channel == ProductionChannel::QuarkAnnihilation ? direct_qq(k) : direct_gg(k);
}

}  // namespace ttqc
