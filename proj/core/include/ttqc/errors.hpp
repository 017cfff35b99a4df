#pragma once

#include <stdexcept>
#include <string>

namespace ttqc {

// Invalid-mass input: the pair cannot be produced below threshold.
struct BelowThresholdError : std::domain_error {
  using std::domain_error::domain_error;
};

// Kinematic point where a closed-form denominator vanishes; the caller must
// perturb the point or take the limit by hand.
struct DegenerateKinematicsError : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested correlations do not correspond to a positive semidefinite state.
struct UnphysicalCorrelationsError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotPositiveSemidefiniteError : std::domain_error {
  using std::domain_error::domain_error;
};

// A closed-form expression was evaluated outside its domain (e.g. negative
// radicand beyond tolerance).  Reported, never silently clamped.
struct FormulaDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An internal identity that must hold for correct transcriptions failed.
struct InternalInconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ttqc
