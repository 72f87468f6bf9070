#pragma once

namespace cpt {

/// Result of a certification attempt. `negative` carries a concrete witness
/// in the surrounding certificate type; `inconclusive` means the implemented
/// condition is one-sided and did not decide the instance.
enum class Outcome {
  positive,
  negative,
  inconclusive,
  not_applicable,
};

const char* to_string(Outcome outcome);

}  // namespace cpt
