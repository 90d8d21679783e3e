#pragma once

// Generalized Hebbian learning of order 1-3 connection strengths.

#include <cstddef>
#include <vector>

#include "logicmine/logic.hpp"
#include "logicmine/synapse.hpp"

namespace logicmine {

class EventTable {
public:
  EventTable(AtomTable atoms, std::vector<Interpretation> records);

  const AtomTable &atoms() const { return atoms_; }
  const std::vector<Interpretation> &records() const { return records_; }
  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t record_count() const { return records_.size(); }

  bool operator==(const EventTable &other) const = default;

private:
  AtomTable atoms_;
  std::vector<Interpretation> records_;
};

// The complete model set of p as an event table (throws when p has no model).
EventTable model_events(const Program &p, std::size_t max_atoms = default_enumeration_limit);

struct LearningRates {
  double a1 = 1.0;
  double a2 = 1.0;
  // Half the pairwise rate: makes learning over a clause's models
  // proportional to the clause's bipolar energy.
  double a3 = 0.5;

  double for_order(std::size_t order) const;
  void validate() const;

  bool operator==(const LearningRates &other) const = default;
};

inline constexpr std::size_t default_learning_limit = 64;

// Sums a_o * prod (2V - 1) over every record and every ascending tuple of
// order o = 1, 2, 3. The offset stays zero.
SynapseSet learn(const EventTable &ev, const LearningRates &rates = {},
                 std::size_t max_atoms = default_learning_limit);

// Closed-form nett pattern of learn() over the complete model set of one
// definite clause (restricted to the clause's atoms). For the violating
// assignment v* (head false, body true) the entry of every nonempty atom
// subset S is -a_|S| * prod_{i in S} s_i(v*).
SynapseSet single_clause_signature(const Clause &c, const LearningRates &rates, std::size_t n_atoms);
SynapseSet single_clause_signature(const Clause &c, const LearningRates &rates);

// The same pattern for a headless clause.
SynapseSet denial_signature(const Clause &c, const LearningRates &rates, std::size_t n_atoms);

} // namespace logicmine
