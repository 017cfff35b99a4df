#pragma once

// Four normalized correlation measures of a two-qubit X state:
// Bell nonlocality, steering, concurrence and geometric quantum discord.
//
// Phase gauge: every measure depends on the off-diagonal entries only
// through |r14| and |r23|.  The phases of r14 and r23 are removable by
// local z rotations, so all formulas below are applied to the moduli.
// Flipping the sign of r14 or r23 therefore never changes a result.

#include "ttqc/qmat.hpp"
#include "ttqc/spin_density.hpp"

namespace ttqc {

// Entries of the correlation-matrix Gram form, in the transcribed
// normalization (t3 carries an overall factor of 4; the Bell measure
// below uses the matching unnormalized combination).
struct ChshEigenvalues {
  double t1, t2, t3;  // t1 >= t2 >= 0
};

ChshEigenvalues chsh_eigenvalues(const XState& x);

struct FanoBlochComponents {
  double s11, s22, s33, s30;
};

FanoBlochComponents fano_bloch(const XState& x);

struct QuantifierSet {
  double bell;         // in [0, 1]
  double steering;     // in [0, 1]
  double concurrence;  // in [0, 1]
  double gqd;          // in [0, 0.5]
};

// Normalized CHSH violation: 0 at or below the classical bound, 1 at the
// Tsirelson bound.  The correlator is 2*sqrt of the two largest diagonal
// Gram entries {(2(|r14|+|r23|))^2, (2(|r14|-|r23|))^2, (r11-r22-r33+r44)^2},
// which maps a maximally entangled state to exactly 2*sqrt(2).
double bell_nonlocality(const XState& x);

// Normalized three-setting steering violation (F3 - 1)/(sqrt(3) - 1) with
// F3 = sqrt(c1^2 + c2^2 + c3^2).
double steering(const XState& x);

// Closed form 2*max{|r23| - sqrt(r11 r44), |r14| - sqrt(r22 r33), 0}.
double concurrence_xstate(const XState& x);

// Eigenvalue definition of the concurrence for an arbitrary two-qubit
// density matrix; serves as an independent oracle for concurrence_xstate.
double concurrence_general(const ComplexMatrix& rho);

// Trace-norm geometric discord of an X state.  The closed form degenerates
// to 0/0 for Bell-diagonal states with equal component magnitudes; in that
// case the limit value (half the intermediate component magnitude) is used.
double geometric_discord(const XState& x);

QuantifierSet quantify_all(const XState& x);

}  // namespace ttqc
