#include <doctest.h>

#include <random>

#include "logicmine/error.hpp"
#include "logicmine/mine.hpp"
#include "logicmine/text.hpp"
#include "oracles.hpp"

using namespace logicmine;

namespace {

const LearningRates half{1.0, 1.0, 0.5};

EventTable events_of(const std::vector<Clause> &clauses, std::size_t n) {
  return EventTable(oracle::letters(n), oracle::models_of(clauses, n));
}

EventTable basket() {
  const std::vector<std::vector<bool>> rows = {
      {true, false, false, false, false}, {false, true, true, true, false}, {true, false, false, false, true},
      {false, true, false, false, true},  {true, false, true, true, false},
  };
  std::vector<Interpretation> records;
  for (const auto &r : rows)
    records.emplace_back(r);
  return EventTable(AtomTable({"Bread", "Jam", "Cheese", "Sausage", "Burger"}), records);
}

// Every definite clause with at most three literals over n atoms.
std::vector<Clause> definite_clauses(std::size_t n) {
  std::vector<Clause> out;
  for (AtomIndex h = 0; h < n; ++h) {
    out.push_back(Clause::fact(h));
    for (AtomIndex a = 0; a < n; ++a) {
      if (a == h)
        continue;
      out.push_back(Clause::rule(h, {a}));
      for (AtomIndex b = a + 1; b < n; ++b)
        if (b != h)
          out.push_back(Clause::rule(h, {a, b}));
    }
  }
  return out;
}

} // namespace

TEST_CASE("identify_head") {
  SUBCASE("signature of A <- B, C") {
    const auto s = single_clause_signature(Clause::rule(0, {1, 2}), half);
    const auto h = identify_head({0, 1, 2}, s);
    CHECK(h.head == 0);
    CHECK(h.score == 6);
    CHECK_FALSE(h.ambiguous);
  }
  SUBCASE("signature of B <- A, C") {
    const auto s = single_clause_signature(Clause::rule(1, {0, 2}), half);
    const auto h = identify_head({0, 1, 2}, s);
    CHECK(h.head == 1);
    CHECK(h.score == 6);
    CHECK_FALSE(h.ambiguous);
  }
  SUBCASE("no lower-order evidence") {
    SynapseSet s(3);
    s.set({0, 1, 2}, 1.0);
    const auto h = identify_head({0, 1, 2}, s);
    CHECK(h.head == 0);
    CHECK(h.score == 0);
    CHECK(h.ambiguous);
  }
}

TEST_CASE("reverse analysis recovers single clauses") {
  SUBCASE("A <- B, C") {
    const auto res = reverse_analyze(learn(events_of({Clause::rule(0, {1, 2})}, 3), half));
    REQUIRE(res.rules.size() == 1);
    CHECK(res.rules[0].clause == Clause::rule(0, {1, 2}));
    CHECK(res.rules[0].weight == 1.0);
    CHECK(res.rules[0].pass == 3);
    CHECK_FALSE(res.rules[0].ambiguous_head);
    CHECK(res.residual.entries.empty());
    CHECK(res.remaining.nonzero_count() == 0);
  }
  SUBCASE("C <- D") {
    const auto res = reverse_analyze(learn(events_of({Clause::rule(0, {1})}, 2), half));
    REQUIRE(res.rules.size() == 1);
    CHECK(res.rules[0].clause == Clause::rule(0, {1}));
    CHECK(res.rules[0].weight == 1.0);
    CHECK(res.rules[0].pass == 2);
    CHECK(res.residual.entries.empty());
  }
  SUBCASE("D <-.") {
    const auto res = reverse_analyze(learn(events_of({Clause::fact(0)}, 1), half));
    REQUIRE(res.rules.size() == 1);
    CHECK(res.rules[0].clause == Clause::fact(0));
    CHECK(res.rules[0].weight == 1.0);
    CHECK(res.rules[0].pass == 1);
    CHECK(res.residual.entries.empty());
  }
  SUBCASE("nothing to find") {
    const auto res = reverse_analyze(SynapseSet(4));
    CHECK(res.rules.empty());
    CHECK(res.residual.entries.empty());
  }
}

TEST_CASE("every definite clause round-trips through mining") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto &c : definite_clauses(n)) {
      const auto ev = events_of({c}, n);
      const auto res = mine(ev);
      REQUIRE(res.rules.size() == 1);
      CHECK(res.rules[0].clause == c);
      CHECK(res.rules[0].weight == static_cast<double>(1U << (n - c.literal_count())));
      CHECK(res.rules[0].confidence == 1.0);
      CHECK(res.residual.entries.empty());
    }
  }
}

TEST_CASE("deflation leaves nothing to re-mine") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<Interpretation> records;
    const std::size_t m = 1 + rng() % 24;
    for (std::size_t r = 0; r < m; ++r)
      records.push_back(oracle::random_state(rng, n));
    MineConfig cfg;
    cfg.emit_denials = rng() % 2;
    cfg.threshold_fraction = 0.25 + 0.25 * static_cast<double>(rng() % 4);
    const auto s = learn(EventTable(oracle::letters(n), records), cfg.rates);
    const auto first = reverse_analyze(s, cfg);

    // Independent deflation: subtract every emitted weight * signature from s.
    SynapseSet deflated = s;
    for (const auto &r : first.rules) {
      const auto sig = r.clause.is_definite() ? single_clause_signature(r.clause, cfg.rates, n)
                                              : denial_signature(r.clause, cfg.rates, n);
      deflated.accumulate(sig, -r.weight);
      REQUIRE(r.weight >= cfg.threshold_fraction);
      REQUIRE(static_cast<std::size_t>(r.pass) == r.clause.literal_count());
    }
    REQUIRE(deflated.max_abs_difference(first.remaining) <= 1e-9);
    REQUIRE(reverse_analyze(first.remaining, cfg).rules.empty());
    REQUIRE(reverse_analyze(deflated, cfg).rules.empty());

    // Residual lists exactly the above-threshold leftovers.
    std::size_t above = 0;
    for (const auto &[k, v] : first.remaining.order3())
      above += std::abs(v) >= cfg.threshold(3);
    for (const auto &[k, v] : first.remaining.order2())
      above += std::abs(v) >= cfg.threshold(2);
    for (const auto &[i, v] : first.remaining.order1())
      above += std::abs(v) >= cfg.threshold(1);
    REQUIRE(first.residual.entries.size() == above);
  }
}

TEST_CASE("threshold monotonicity on clean clause data") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto &c : definite_clauses(n)) {
      const auto s = learn(events_of({c}, n));
      std::size_t prev = SIZE_MAX;
      for (double theta : {0.125, 0.25, 0.5, 0.75, 1.0}) {
        MineConfig cfg;
        cfg.threshold_fraction = theta;
        const auto count = reverse_analyze(s, cfg).rules.size();
        REQUIRE(count <= prev);
        prev = count;
      }
    }
  }
}

TEST_CASE("raising the threshold can add rules when deflation cascades") {
  // T_ABC = 0.3, T_AB = T_AC = 0.8, T_A = 1. At theta 0.5 the triple is
  // emitted and its deflation absorbs both pairs; at theta 0.7 the triple is
  // skipped and the two pairs plus two facts surface instead.
  SynapseSet s(3);
  s.set({0, 1, 2}, 0.3);
  s.set({0, 1}, 0.8);
  s.set({0, 2}, 0.8);
  s.set({0}, 1.0);
  MineConfig low;
  MineConfig high;
  high.threshold_fraction = 0.7;
  CHECK(reverse_analyze(s, low).rules.size() == 3);
  CHECK(reverse_analyze(s, high).rules.size() == 4);
}

TEST_CASE("denials are opt-in") {
  // Events where A and B never co-occur: strong negative pair.
  const auto ev = events_of({Clause::denial({0, 1})}, 2);
  const auto plain = mine(ev);
  CHECK(plain.rules.empty());
  CHECK_FALSE(plain.residual.entries.empty());

  MineConfig cfg;
  cfg.emit_denials = true;
  const auto with = mine(ev, cfg);
  REQUIRE(with.rules.size() == 1);
  CHECK(with.rules[0].clause == Clause::denial({0, 1}));
  CHECK(with.rules[0].pass == 2);
  CHECK(with.residual.entries.empty());
}

TEST_CASE("rule confidence on basket data") {
  const auto ev = basket();
  // Bread 0, Jam 1, Cheese 2, Sausage 3, Burger 4
  auto rc = rule_confidence(Clause::rule(0, {1, 2}), ev);
  CHECK(rc.support == 1);
  CHECK(rc.confidence == 0.0);
  rc = rule_confidence(Clause::rule(4, {2, 3}), ev);
  CHECK(rc.support == 2);
  CHECK(rc.confidence == 0.0);
  rc = rule_confidence(Clause::fact(0), ev);
  CHECK(rc.support == 5);
  CHECK(rc.confidence == doctest::Approx(0.6));
  rc = rule_confidence(Clause::rule(0, {2, 4}), ev);
  CHECK(rc.support == 0);
  CHECK(rc.confidence == 1.0);
  CHECK_THROWS_AS(rule_confidence(Clause::fact(7), ev), StructuralError);
}

TEST_CASE("confidence filter moves rules to the dropped list") {
  const auto ev = basket();
  const auto all = mine(ev);
  MineConfig cfg;
  cfg.min_confidence = 1.0;
  const auto strict = mine(ev, cfg);
  CHECK(strict.rules.size() + strict.dropped.size() == all.rules.size());
  for (const auto &r : strict.rules) {
    std::size_t counterexamples = 0;
    for (const auto &rec : ev.records())
      counterexamples += oracle::clause_holds(r.clause, rec) ? 0 : 1;
    CHECK(counterexamples == 0);
  }
  for (const auto &r : strict.dropped)
    CHECK(*r.confidence < 1.0);
}

TEST_CASE("all assignments mine to nothing") {
  const EventTable ev(oracle::letters(4), oracle::all_assignments(4));
  const auto res = mine(ev);
  CHECK(res.rules.empty());
  CHECK(res.residual.entries.empty());
  CHECK(res.synapses.nonzero_count() == 0);
}

TEST_CASE("mine validates its configuration") {
  MineConfig cfg;
  cfg.threshold_fraction = 0.0;
  CHECK_THROWS(mine(basket(), cfg));
  cfg.threshold_fraction = 0.5;
  cfg.min_confidence = 1.5;
  CHECK_THROWS(mine(basket(), cfg));
}
