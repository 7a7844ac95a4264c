#pragma once

#include <string>
#include <vector>

namespace ringplane {

/// One recorded counterexample, re-checked against the current code.
struct CounterexampleOutcome {
  std::string what;
  bool reproduced = false;
};

/// The regression suite of recorded counterexamples: the Z/4 incidence
/// pathologies, the Z/6 locality and matrix failures, the rational Desargues
/// premise failure, and the Z/4 affine lines whose meet escapes to infinity.
std::vector<CounterexampleOutcome> run_counterexamples();

}  // namespace ringplane
