#pragma once

// Asynchronous deterministic relaxation and multi-restart model search.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "logicmine/logic.hpp"
#include "logicmine/synapse.hpp"

namespace logicmine {

struct RelaxConfig {
  std::size_t max_sweeps = 100;
  std::uint64_t seed = 0;
  Representation representation = Representation::bipolar;
};

struct RelaxResult {
  Interpretation final_state;
  bool stable = false;
  std::size_t sweeps_used = 0;
  double initial_energy = 0.0;
  // energy_total after each flip, in flip order.
  std::vector<double> energy_trace;

  bool operator==(const RelaxResult &other) const = default;
};

// Visits every neuron once per sweep in a fresh seeded permutation and
// applies x_i <- sgn(h_i) (bipolar) or step(h_i) (binary) immediately.
// h_i == 0 keeps the current state. Stops after the first sweep without a
// flip or after max_sweeps; `stable` reports whether the final state is a
// fixed point of the update rule.
RelaxResult relax(const SynapseSet &s, const Interpretation &x0, const RelaxConfig &cfg);

// True when no neuron would change under the update rule.
bool is_fixed_point(const SynapseSet &s, const Interpretation &x, Representation r);

struct SolveStats {
  std::size_t restarts = 0;
  std::size_t successes = 0;
  std::size_t distinct_models = 0;
};

struct SolveResult {
  // Distinct models found, ascending binary order; each certified by cost().
  std::vector<Interpretation> models;
  SolveStats stats;
};

struct SolveConfig {
  Representation representation = Representation::bipolar;
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  std::size_t max_sweeps = 100;
};

// Compiles p, relaxes from `restarts` seeded random states and keeps the
// relaxed states that satisfy every clause.
SolveResult solve(const Program &p, const SolveConfig &cfg);

} // namespace logicmine
