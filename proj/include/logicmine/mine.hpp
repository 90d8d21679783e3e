#pragma once

// Reverse analysis: recover Horn clauses from learned connection strengths
// by matching clause signatures order by order and deflating each match.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "logicmine/hebb.hpp"
#include "logicmine/logic.hpp"
#include "logicmine/synapse.hpp"

namespace logicmine {

struct MineConfig {
  LearningRates rates;
  // An order-o entry counts as present when |T| >= threshold_fraction * a_o.
  double threshold_fraction = 0.5;
  std::optional<double> min_confidence;
  bool emit_denials = false;

  double threshold(std::size_t order) const { return threshold_fraction * rates.for_order(order); }
  void validate() const;
};

struct MinedRule {
  Clause clause;
  double weight = 0.0;
  int pass = 0;
  bool ambiguous_head = false;
  std::optional<std::size_t> support;
  std::optional<double> confidence;

  bool operator==(const MinedRule &other) const = default;
};

struct ResidualEntry {
  std::vector<AtomIndex> key;
  double value = 0.0;

  bool operator==(const ResidualEntry &other) const = default;
};

struct ResidualReport {
  // Above-threshold leftovers: order 3 first, then 2, then 1, keys ascending.
  std::vector<ResidualEntry> entries;
  // Sum of |T| over all leftover entries, indexed by order - 1.
  std::array<double, 3> l1_norm{0.0, 0.0, 0.0};

  bool operator==(const ResidualReport &other) const = default;
};

struct HeadChoice {
  AtomIndex head = 0;
  int score = 0;
  bool ambiguous = false;
};

// Scores each member of the triple as head x with body {y, z} against the
// expected signs T_xy>0, T_xz>0, T_yz<0, T_x>0, T_y<0, T_z<0. Ties go to the
// lowest index and are flagged ambiguous.
HeadChoice identify_head(const Key3 &triple, const SynapseSet &s);

struct ReverseAnalysis {
  std::vector<MinedRule> rules;
  ResidualReport residual;
  // Synapses left after every emitted rule was deflated.
  SynapseSet remaining;
};

ReverseAnalysis reverse_analyze(const SynapseSet &s, const MineConfig &cfg = {});

struct RuleConfidence {
  std::size_t support = 0;
  double confidence = 1.0;
};

// support: records whose body holds; confidence: share of those whose head
// holds (headless clauses: share where the clause holds). Support 0 gives 1.
RuleConfidence rule_confidence(const Clause &c, const EventTable &ev);

struct MineResult {
  std::vector<MinedRule> rules;
  // Rules removed by the min_confidence filter.
  std::vector<MinedRule> dropped;
  ResidualReport residual;
  SynapseSet synapses;
};

MineResult mine(const EventTable &ev, const MineConfig &cfg = {});

// Report order: pass descending, weight descending, then clause text.
void sort_rules(std::vector<MinedRule> &rules, const AtomTable &atoms);

} // namespace logicmine
