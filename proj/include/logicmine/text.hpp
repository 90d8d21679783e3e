#pragma once

// Text formats: logic programs, event CSV, synapse listings, mined rules.
//
// Program:   one clause per line, `Head <- B1, B2.` | `Head <-.` | `<- B1, B2.`
//            `#` starts a comment; atoms are registered in order of appearance.
// Events:    CSV header of atom names, then rows over {0,1} or over {-1,1}.
//            A row may carry a leading `label:` which is ignored.
// Synapses:  `atoms: A B ...`, `E0 v`, then `T1 i v`, `T2 i j v`, `T3 i j k v`
//            with ascending indices; values use 17 significant digits.
// Rules:     `clause<TAB>weight=..<TAB>pass=..<TAB>support=..<TAB>confidence=..<TAB>ambiguous=..`
//            followed by optional `# dropped` and `# residual` sections.

#include <string>
#include <string_view>
#include <vector>

#include "logicmine/hebb.hpp"
#include "logicmine/logic.hpp"
#include "logicmine/mine.hpp"
#include "logicmine/synapse.hpp"

namespace logicmine {

std::string format_clause(const Clause &c, const AtomTable &atoms);

// Parses a single clause. With `register_atoms` false every atom must
// already exist in `atoms`.
Clause parse_clause(std::string_view text, AtomTable &atoms, bool register_atoms = true, std::size_t line = 0);

Program parse_program(std::string_view text);
std::string print_program(const Program &p);

EventTable read_events(std::string_view csv);
std::string write_events(const EventTable &ev);

SynapseSet read_synapses(std::string_view text, AtomTable *atoms = nullptr);
std::string write_synapses(const SynapseSet &s, const AtomTable &atoms);

// 17 significant digits, always round-trips.
std::string format_real(double v);
// Shortest representation that round-trips.
std::string format_short(double v);

std::string write_rules(const MineResult &result, const AtomTable &atoms);
// Clauses of the rule section of a rules file, resolved against `atoms`.
std::vector<Clause> read_rule_clauses(std::string_view text, const AtomTable &atoms);

std::string write_solutions(const std::vector<Interpretation> &models, const AtomTable &atoms,
                            std::size_t restarts, std::size_t successes);

} // namespace logicmine
