#pragma once

#include <map>
#include <string>

namespace striphyp {

struct GridConfig {
  double t_max = 1e4;   // largest abscissa of the base grid
  int points = 1000;    // grid points per sweep
  int doublings = 3;    // range doublings for boundedness checks
};

/// Outcome of a semidecidable condition check. Holds is only ever
/// issued from symbolic knowledge attached at construction; finite
/// sampling alone yields NumericallySupported.
struct ConditionVerdict {
  enum class Status { Holds, Fails, NumericallySupported };
  Status status = Status::NumericallySupported;
  std::map<std::string, double> witness;  // named constants (A, H, mu, ...)
  double evidence_range = 0.0;            // largest t tested

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
};

inline const char* to_string(ConditionVerdict::Status s) {
  switch (s) {
    case ConditionVerdict::Status::Holds: return "Holds";
    case ConditionVerdict::Status::Fails: return "Fails";
    default: return "NumericallySupported";
  }
}

}  // namespace striphyp
