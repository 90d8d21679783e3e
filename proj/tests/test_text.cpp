#include <doctest.h>

#include <cmath>
#include <random>

#include "logicmine/error.hpp"
#include "logicmine/text.hpp"
#include "logicmine/translate.hpp"
#include "oracles.hpp"

using namespace logicmine;

TEST_CASE("parse clauses") {
  SUBCASE("fact") {
    const auto p = parse_program("C <-.\n");
    REQUIRE(p.clauses().size() == 1);
    CHECK(p.clauses()[0] == Clause::fact(0));
    CHECK(p.atoms().names() == std::vector<std::string>{"C"});
  }
  SUBCASE("rule") {
    const auto p = parse_program("A <- B, C.");
    REQUIRE(p.clauses().size() == 1);
    CHECK(p.clauses()[0] == Clause::rule(0, {1, 2}));
    CHECK(p.atoms().names() == std::vector<std::string>{"A", "B", "C"});
  }
  SUBCASE("denial and comments") {
    const auto p = parse_program("# header\n\n  <- X ,Y .  # trailing\nX <- .\n");
    REQUIRE(p.clauses().size() == 2);
    CHECK(p.clauses()[0] == Clause::denial({0, 1}));
    CHECK(p.clauses()[1] == Clause::fact(0));
  }
  SUBCASE("duplicate body atom") {
    CHECK_THROWS_AS(parse_program("A <- B B."), ParseError);
    CHECK_THROWS_WITH_AS(parse_program("A <- B, B."), doctest::Contains("duplicate body atom"), ParseError);
  }
  SUBCASE("head repeated in body") {
    CHECK_THROWS_WITH_AS(parse_program("A <- B, A."), doctest::Contains("repeated in body"), ParseError);
  }
  SUBCASE("errors carry line and column") {
    try {
      parse_program("A <- B.\nC <- D\n");
      FAIL("expected a parse error");
    } catch (const ParseError &e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_program("<-."), ParseError);
    CHECK_THROWS_AS(parse_program("A."), ParseError);
    CHECK_THROWS_AS(parse_program("A <- 1B."), ParseError);
    CHECK_THROWS_AS(parse_program("A <- B. C <-."), ParseError);
  }
  SUBCASE("fixed atom table") {
    AtomTable atoms({"A", "B"});
    CHECK(parse_clause("B <- A.", atoms, false) == Clause::rule(1, {0}));
    CHECK_THROWS_AS(parse_clause("B <- Z.", atoms, false), ParseError);
    CHECK(atoms.size() == 2);
  }
}

TEST_CASE("program text round-trips") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto random = oracle::random_program(rng, 8, 6);
    // Canonical form: atoms in order of first appearance.
    const auto p = parse_program(print_program(random));
    const auto text = print_program(p);
    REQUIRE(parse_program(text) == p);
    REQUIRE(print_program(parse_program(text)) == text);
  }
}

TEST_CASE("events CSV") {
  SUBCASE("labelled row") {
    const auto ev = read_events("Bread,Jam,Cheese,Sausage,Burger\nPeter: 1,0,0,0,0\n");
    REQUIRE(ev.record_count() == 1);
    CHECK(ev.records()[0] == Interpretation(std::vector<bool>{true, false, false, false, false}));
  }
  SUBCASE("bipolar alphabet") {
    const auto ev = read_events("A,B\n1,-1\n-1,-1\n");
    CHECK(ev.records()[0] == Interpretation(std::vector<bool>{true, false}));
    CHECK(ev.records()[1] == Interpretation(std::vector<bool>{false, false}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(read_events("A,B\n1,0\n1\n"), ParseError);
    CHECK_THROWS_AS(read_events("A,B\n1,2\n"), ParseError);
    CHECK_THROWS_AS(read_events("A,B\n1,0\n-1,1\n"), ParseError);
    CHECK_THROWS_AS(read_events("A,B\n"), ParseError);
    CHECK_THROWS_AS(read_events("A,A\n1,0\n"), ParseError);
    CHECK_THROWS_AS(read_events(""), ParseError);
  }
  SUBCASE("round trip") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      std::vector<Interpretation> records;
      for (std::size_t r = 0, m = 1 + rng() % 10; r < m; ++r)
        records.push_back(oracle::random_state(rng, n));
      const EventTable ev(oracle::letters(n), records);
      REQUIRE(read_events(write_events(ev)) == ev);
    }
  }
}

TEST_CASE("synapse text") {
  SUBCASE("compiled P1 round-trips") {
    const auto p = parse_program("A <- B, C.\nD <- B.\nC <-.\n");
    const auto s = compile(p, Representation::binary01);
    const auto text = write_synapses(s, p.atoms());
    CHECK(text == "atoms: A B C D\nE0 1\nT1 1 -1\nT1 2 1\nT2 1 2 -1\nT2 1 3 1\nT3 0 1 2 0.5\n");
    AtomTable atoms;
    CHECK(read_synapses(text, &atoms) == s);
    CHECK(atoms == p.atoms());
  }
  SUBCASE("rejections") {
    CHECK_THROWS_WITH_AS(read_synapses("atoms: A B\nT2 1 0 0.5\n"), doctest::Contains("non-ascending"), ParseError);
    CHECK_THROWS_AS(read_synapses("atoms: A B\nT2 0 0 0.5\n"), ParseError);
    CHECK_THROWS_AS(read_synapses("atoms: A B\nT1 2 0.5\n"), ParseError);
    CHECK_THROWS_AS(read_synapses("atoms: A B\nT1 0 x\n"), ParseError);
    CHECK_THROWS_AS(read_synapses("atoms: A B\nT1 0 1\nT1 0 2\n"), ParseError);
    CHECK_THROWS_AS(read_synapses("T1 0 1\n"), ParseError);
    CHECK_THROWS_AS(read_synapses("atoms: A\nT4 0 1\n"), ParseError);
  }
  SUBCASE("random real values round-trip bit-exactly") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      auto s = oracle::random_real_synapses(rng, n, 0.5);
      s.set_offset(std::ldexp(static_cast<double>(rng() % 1000) - 500.0, -static_cast<int>(rng() % 40)) / 3.0);
      const auto atoms = oracle::letters(n);
      const auto text = write_synapses(s, atoms);
      const auto back = read_synapses(text);
      REQUIRE(back == s);
      REQUIRE(write_synapses(back, atoms) == text);
    }
  }
}

TEST_CASE("number formatting") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_short(0.6) == "0.6");
  CHECK(format_short(4.0) == "4");
}

TEST_CASE("rules text") {
  AtomTable atoms({"A", "B", "C"});
  MineResult r;
  r.rules.push_back({Clause::rule(0, {1, 2}), 1.0, 3, false, 4, 1.0});
  r.rules.push_back({Clause::fact(2), 2.0, 1, true, 5, 0.6});
  r.dropped.push_back({Clause::rule(1, {0}), 1.0, 2, false, 2, 0.5});
  r.residual.entries.push_back({{0, 1}, -2.0});
  r.residual.l1_norm = {0.25, 2.0, 0.0};
  const auto text = write_rules(r, atoms);
  CHECK(text == "A <- B, C.\tweight=1\tpass=3\tsupport=4\tconfidence=1\tambiguous=false\n"
                "C <-.\tweight=2\tpass=1\tsupport=5\tconfidence=0.6\tambiguous=true\n"
                "# dropped\n"
                "B <- A.\tweight=1\tpass=2\tsupport=2\tconfidence=0.5\tambiguous=false\n"
                "# residual\n"
                "T2 A B\t-2\n"
                "# l1 order3=0 order2=2 order1=0.25\n");
  const auto clauses = read_rule_clauses(text, atoms);
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[0] == Clause::rule(0, {1, 2}));
  CHECK(clauses[1] == Clause::fact(2));
  CHECK_THROWS_AS(read_rule_clauses("Z <-.\tweight=1\n", atoms), ParseError);
}
