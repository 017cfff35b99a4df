#pragma once

// Central numeric tolerances.  Every threshold used by the library lives
// here so that tests and implementation agree on a single value.

namespace ttqc::tol {

// qmat kernel
inline constexpr double kHermitian = 1e-10;        // max |m - m^dagger| accepted as Hermitian
inline constexpr double kEigenReconstruct = 1e-9;  // promised |V L V^dagger - m|
inline constexpr double kEigenOffdiag = 1e-15;     // Jacobi sweep stop, relative to scale
inline constexpr double kPsdClamp = 1e-10;         // eigenvalues above -kPsdClamp clamp to 0
inline constexpr double kSqrtPsd = 1e-8;           // promised |r*r - m|
inline constexpr double kDensity = 1e-9;           // density-matrix predicate tolerance

// spin density
inline constexpr double kTraceOne = 1e-12;         // |tr - 1| for X states
inline constexpr double kDiagNonneg = 1e-12;       // diagonal entries >= -kDiagNonneg
inline constexpr double kXStatePsd = 1e-9;         // |r14| <= sqrt(r11 r44) + kXStatePsd
inline constexpr double kDegenerateKinematics = 1e-14;  // |denominator| below -> reject

// quantifiers
inline constexpr double kQuantClamp = 1e-12;       // clamp band around [0, bound]
inline constexpr double kGqdDegenerate = 1e-12;    // |denominator| below -> limit branch
inline constexpr double kHierarchyEps = 1e-9;      // positivity threshold in region checks

// channels
inline constexpr double kKrausComplete = 1e-12;    // |sum K^dagger K - I|
inline constexpr double kChannelOutput = 1e-10;    // trace / PSD of channel outputs

// teleportation
inline constexpr double kProbNonneg = 1e-12;       // outcome probabilities >= -kProbNonneg
inline constexpr double kProbSum = 1e-10;          // |sum p_ij - 1|
inline constexpr double kTeleportPsd = 1e-9;       // PSD slack of the closed-form output

}  // namespace ttqc::tol
