#include "logicmine/mine.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "logicmine/error.hpp"
#include "logicmine/text.hpp"

namespace logicmine {

void MineConfig::validate() const {
  rates.validate();
  if (!(threshold_fraction > 0.0 && threshold_fraction <= 1.0))
    throw Error("threshold fraction must lie in (0, 1]");
  if (min_confidence && !(*min_confidence >= 0.0 && *min_confidence <= 1.0))
    throw Error("minimum confidence must lie in [0, 1]");
}

HeadChoice identify_head(const Key3 &triple, const SynapseSet &s) {
  HeadChoice best{triple[0], -1, false};
  for (std::size_t h = 0; h < 3; ++h) {
    const AtomIndex x = triple[h];
    const AtomIndex y = triple[(h + 1) % 3];
    const AtomIndex z = triple[(h + 2) % 3];
    int score = 0;
    score += s.get({x, y}) > 0.0;
    score += s.get({x, z}) > 0.0;
    score += s.get({y, z}) < 0.0;
    score += s.get({x}) > 0.0;
    score += s.get({y}) < 0.0;
    score += s.get({z}) < 0.0;
    if (score > best.score) {
      best = {x, score, false};
    } else if (score == best.score) {
      best.ambiguous = true;
      best.head = std::min(best.head, x);
    }
  }
  return best;
}

namespace {

template <class Key> struct Candidate {
  Key key;
  double value;
};

// Positive candidates by descending value, then the most negative ones; key
// order breaks ties.
template <class Map>
std::pair<std::vector<Candidate<typename Map::key_type>>, std::vector<Candidate<typename Map::key_type>>>
candidates(const Map &entries, double tau) {
  using C = Candidate<typename Map::key_type>;
  std::vector<C> pos;
  std::vector<C> neg;
  for (const auto &[k, v] : entries) {
    if (v >= tau)
      pos.push_back({k, v});
    else if (v <= -tau)
      neg.push_back({k, v});
  }
  std::stable_sort(pos.begin(), pos.end(), [](const C &a, const C &b) { return a.value > b.value; });
  std::stable_sort(neg.begin(), neg.end(), [](const C &a, const C &b) { return a.value < b.value; });
  return {std::move(pos), std::move(neg)};
}

std::vector<AtomIndex> key_vector(AtomIndex k) { return {k}; }
template <std::size_t N> std::vector<AtomIndex> key_vector(const std::array<AtomIndex, N> &k) {
  return {k.begin(), k.end()};
}

class Analyzer {
public:
  Analyzer(const SynapseSet &s, const MineConfig &cfg) : work_(s), cfg_(cfg) {}

  void run_pass3() {
    const double tau = cfg_.threshold(3);
    auto [pos, neg] = candidates(work_.order3(), tau);
    for (const auto &c : pos) {
      const double current = work_.get(c.key);
      if (current < tau)
        continue;
      const HeadChoice head = identify_head(c.key, work_);
      std::vector<AtomIndex> body;
      for (AtomIndex a : c.key)
        if (a != head.head)
          body.push_back(a);
      emit(Clause::rule(head.head, std::move(body)), current, 3, head.ambiguous, key_vector(c.key));
    }
    if (cfg_.emit_denials)
      emit_denials(neg, 3);
  }

  void run_pass2() {
    const double tau = cfg_.threshold(2);
    auto [pos, neg] = candidates(work_.order2(), tau);
    for (const auto &c : pos) {
      const double current = work_.get(c.key);
      if (current < tau)
        continue;
      const double first = work_.get({c.key[0]});
      const double second = work_.get({c.key[1]});
      const bool ambiguous = first == second;
      const AtomIndex head = second > first ? c.key[1] : c.key[0];
      const AtomIndex body = head == c.key[0] ? c.key[1] : c.key[0];
      emit(Clause::rule(head, {body}), current, 2, ambiguous, key_vector(c.key));
    }
    if (cfg_.emit_denials)
      emit_denials(neg, 2);
  }

  void run_pass1() {
    const double tau = cfg_.threshold(1);
    auto [pos, neg] = candidates(work_.order1(), tau);
    for (const auto &c : pos) {
      const double current = work_.get({c.key});
      if (current < tau)
        continue;
      emit(Clause::fact(c.key), current, 1, false, key_vector(c.key));
    }
    if (cfg_.emit_denials)
      emit_denials(neg, 1);
  }

  ResidualReport residual() const {
    ResidualReport report;
    auto collect = [&](const auto &entries, std::size_t order) {
      const double tau = cfg_.threshold(order);
      for (const auto &[k, v] : entries) {
        report.l1_norm[order - 1] += std::abs(v);
        if (std::abs(v) >= tau)
          report.entries.push_back({key_vector(k), v});
      }
    };
    collect(work_.order3(), 3);
    collect(work_.order2(), 2);
    collect(work_.order1(), 1);
    return report;
  }

  std::vector<MinedRule> take_rules() { return std::move(rules_); }
  const SynapseSet &remaining() const { return work_; }

private:
  template <class C> void emit_denials(const std::vector<C> &neg, int order) {
    const double tau = cfg_.threshold(order);
    for (const auto &c : neg) {
      auto key = key_vector(c.key);
      const double current = work_.get(key);
      if (current > -tau)
        continue;
      emit(Clause::denial(key), current, order, false, key);
    }
  }

  // Subtracts weight * signature; the matched entry itself is cleared so
  // rounding in value / rate * rate cannot leave dust behind.
  void emit(Clause clause, double current, int pass, bool ambiguous, const std::vector<AtomIndex> &key) {
    const double rate = cfg_.rates.for_order(key.size());
    const double weight = std::abs(current) / rate;
    const SynapseSet sig = clause.is_definite() ? single_clause_signature(clause, cfg_.rates, work_.n_atoms())
                                                : denial_signature(clause, cfg_.rates, work_.n_atoms());
    work_.accumulate(sig, -weight);
    work_.set(key, 0.0);
    MinedRule rule{std::move(clause), weight, pass, ambiguous, std::nullopt, std::nullopt};
    rules_.push_back(std::move(rule));
  }

  SynapseSet work_;
  const MineConfig &cfg_;
  std::vector<MinedRule> rules_;
};

} // namespace

ReverseAnalysis reverse_analyze(const SynapseSet &s, const MineConfig &cfg) {
  cfg.validate();
  Analyzer analyzer(s, cfg);
  analyzer.run_pass3();
  analyzer.run_pass2();
  analyzer.run_pass1();
  ReverseAnalysis out;
  out.residual = analyzer.residual();
  out.remaining = analyzer.remaining();
  out.rules = analyzer.take_rules();
  return out;
}

RuleConfidence rule_confidence(const Clause &c, const EventTable &ev) {
  if (c.max_atom() >= ev.atom_count())
    throw StructuralError("rule refers to atom " + std::to_string(c.max_atom()) + " but the events have " +
                          std::to_string(ev.atom_count()) + " atoms");
  RuleConfidence rc;
  std::size_t holds = 0;
  for (const auto &record : ev.records()) {
    const bool body = std::all_of(c.body().begin(), c.body().end(), [&](AtomIndex b) { return record[b]; });
    if (!body)
      continue;
    ++rc.support;
    if (c.head() && record[*c.head()])
      ++holds;
  }
  rc.confidence = rc.support == 0 ? 1.0 : static_cast<double>(holds) / static_cast<double>(rc.support);
  return rc;
}

void sort_rules(std::vector<MinedRule> &rules, const AtomTable &atoms) {
  std::vector<std::pair<std::string, MinedRule>> keyed;
  keyed.reserve(rules.size());
  for (auto &r : rules)
    keyed.emplace_back(format_clause(r.clause, atoms), std::move(r));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
    if (a.second.pass != b.second.pass)
      return a.second.pass > b.second.pass;
    if (a.second.weight != b.second.weight)
      return a.second.weight > b.second.weight;
    return a.first < b.first;
  });
  rules.clear();
  for (auto &[text, r] : keyed)
    rules.push_back(std::move(r));
}

MineResult mine(const EventTable &ev, const MineConfig &cfg) {
  cfg.validate();
  MineResult out;
  out.synapses = learn(ev, cfg.rates);
  auto analysis = reverse_analyze(out.synapses, cfg);
  out.residual = std::move(analysis.residual);
  for (auto &rule : analysis.rules) {
    const auto rc = rule_confidence(rule.clause, ev);
    rule.support = rc.support;
    rule.confidence = rc.confidence;
    if (cfg.min_confidence && rc.confidence < *cfg.min_confidence)
      out.dropped.push_back(std::move(rule));
    else
      out.rules.push_back(std::move(rule));
  }
  sort_rules(out.rules, ev.atoms());
  sort_rules(out.dropped, ev.atoms());
  return out;
}

} // namespace logicmine
