#include "logicmine/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

#include "logicmine/error.hpp"

namespace logicmine {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

// Splits on '\n'; line numbers are the vector index + 1.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size())
        lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos)
      break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i]))
      ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i]))
      ++i;
    if (i > start)
      out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

double parse_real(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto *first = s.data();
  const auto *last = s.data() + s.size();
  if (!s.empty() && *first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError("invalid number '" + std::string(s) + "'", line);
  return v;
}

AtomIndex parse_index(std::string_view s, std::size_t line) {
  AtomIndex v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("invalid atom index '" + std::string(s) + "'", line);
  return v;
}

class ClauseScanner {
public:
  ClauseScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_]))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token))
      fail("expected '" + std::string(token) + "'");
  }
  bool at_identifier() {
    skip_space();
    if (pos_ >= text_.size())
      return false;
    const auto c = static_cast<unsigned char>(text_[pos_]);
    return std::isalpha(c) || c == '_';
  }
  std::string_view identifier() {
    if (!at_identifier())
      fail("expected an atom name");
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(c) && c != '_')
        break;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, line_, pos_ + 1); }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

AtomIndex resolve(std::string_view name, AtomTable &atoms, bool register_atoms, const ClauseScanner &sc) {
  if (auto i = atoms.find(name))
    return *i;
  if (!register_atoms)
    sc.fail("unknown atom '" + std::string(name) + "'");
  return atoms.add(std::string(name));
}

std::string format_with(const char *fmt, double v) {
  if (v == 0.0)
    return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

} // namespace

std::string format_real(double v) { return format_with("%.17g", v); }

std::string format_short(double v) {
  if (v == 0.0)
    return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_clause(const Clause &c, const AtomTable &atoms) {
  std::string out;
  if (c.head())
    out += atoms.name(*c.head()) + " ";
  out += "<-";
  for (std::size_t i = 0; i < c.body().size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += atoms.name(c.body()[i]);
  }
  out += ".";
  return out;
}

Clause parse_clause(std::string_view text, AtomTable &atoms, bool register_atoms, std::size_t line) {
  ClauseScanner sc(text, line);
  // Atoms are registered only once the whole clause parsed, so a failed
  // parse leaves the table untouched.
  AtomTable scratch = atoms;
  std::optional<AtomIndex> head;
  if (sc.at_identifier())
    head = resolve(sc.identifier(), scratch, register_atoms, sc);
  sc.expect("<-");
  std::vector<AtomIndex> body;
  std::set<AtomIndex> seen;
  if (!sc.accept(".")) {
    for (;;) {
      const std::size_t col = sc.column();
      const auto name = sc.identifier();
      const AtomIndex b = resolve(name, scratch, register_atoms, sc);
      if (head && b == *head)
        throw ParseError("head '" + std::string(name) + "' repeated in body", line, col);
      if (!seen.insert(b).second)
        throw ParseError("duplicate body atom '" + std::string(name) + "'", line, col);
      body.push_back(b);
      if (sc.accept("."))
        break;
      if (sc.at_identifier())
        throw ParseError("duplicate body atom or missing ','", line, sc.column());
      sc.expect(",");
    }
  }
  if (!sc.at_end())
    sc.fail("unexpected text after clause");
  if (!head && body.empty())
    throw ParseError("empty clause", line, 1);
  Clause c(head, std::move(body));
  atoms = std::move(scratch);
  return c;
}

Program parse_program(std::string_view text) {
  Program p;
  std::vector<Clause> clauses;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = strip_comment(lines[n]);
    if (trim(line).empty())
      continue;
    clauses.push_back(parse_clause(line, p.atoms(), true, n + 1));
  }
  for (auto &c : clauses)
    p.add_clause(std::move(c));
  return p;
}

std::string print_program(const Program &p) {
  std::string out;
  for (const auto &c : p.clauses())
    out += format_clause(c, p.atoms()) + "\n";
  return out;
}

EventTable read_events(std::string_view csv) {
  const auto lines = split_lines(csv);
  std::optional<AtomTable> atoms;
  std::vector<Interpretation> records;
  bool seen_zero = false;
  bool seen_minus = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = trim(lines[n]);
    if (line.empty() || line.front() == '#')
      continue;
    const std::size_t lineno = n + 1;
    if (!atoms) {
      AtomTable header;
      for (auto cell : split(line, ',')) {
        const auto name = trim(cell);
        if (!is_identifier(name))
          throw ParseError("invalid atom name '" + std::string(name) + "' in header", lineno);
        if (header.find(name))
          throw ParseError("duplicate atom '" + std::string(name) + "' in header", lineno);
        header.add(std::string(name));
      }
      atoms = std::move(header);
      continue;
    }
    auto data = line;
    if (const auto colon = data.find(':'); colon != std::string_view::npos)
      data = data.substr(colon + 1);
    const auto cells = split(data, ',');
    if (cells.size() != atoms->size())
      throw ParseError("row has " + std::to_string(cells.size()) + " values, header has " +
                           std::to_string(atoms->size()),
                       lineno);
    Interpretation x(atoms->size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto cell = trim(cells[i]);
      if (cell == "1") {
        x.set(i, true);
      } else if (cell == "0") {
        seen_zero = true;
      } else if (cell == "-1") {
        seen_minus = true;
      } else {
        throw ParseError("unknown value '" + std::string(cell) + "'", lineno);
      }
      if (seen_zero && seen_minus)
        throw ParseError("mixed {0,1} and {-1,1} values", lineno);
    }
    records.push_back(std::move(x));
  }
  if (!atoms)
    throw ParseError("events file has no header");
  if (records.empty())
    throw ParseError("events file has no data rows");
  return EventTable(std::move(*atoms), std::move(records));
}

std::string write_events(const EventTable &ev) {
  std::string out;
  const auto &names = ev.atoms().names();
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? "," : "") + names[i];
  out += "\n";
  for (const auto &r : ev.records()) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i)
        out += ',';
      out += r[i] ? '1' : '0';
    }
    out += "\n";
  }
  return out;
}

SynapseSet read_synapses(std::string_view text, AtomTable *atoms_out) {
  const auto lines = split_lines(text);
  std::optional<AtomTable> atoms;
  SynapseSet s;
  bool have_offset = false;
  std::set<std::vector<AtomIndex>> seen;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = trim(lines[n]);
    if (line.empty() || line.front() == '#')
      continue;
    const std::size_t lineno = n + 1;
    if (!atoms) {
      if (line.substr(0, 6) != "atoms:")
        throw ParseError("expected 'atoms:' header", lineno);
      AtomTable table;
      for (auto name : split_ws(line.substr(6))) {
        if (!is_identifier(name) || table.find(name))
          throw ParseError("invalid or duplicate atom '" + std::string(name) + "'", lineno);
        table.add(std::string(name));
      }
      s = SynapseSet(table.size());
      atoms = std::move(table);
      continue;
    }
    const auto fields = split_ws(line);
    const auto tag = fields.front();
    if (tag == "E0") {
      if (fields.size() != 2)
        throw ParseError("E0 takes one value", lineno);
      if (have_offset)
        throw ParseError("duplicate E0 line", lineno);
      have_offset = true;
      s.set_offset(parse_real(fields[1], lineno));
      continue;
    }
    std::size_t order = 0;
    if (tag == "T1")
      order = 1;
    else if (tag == "T2")
      order = 2;
    else if (tag == "T3")
      order = 3;
    else
      throw ParseError("unknown line tag '" + std::string(tag) + "'", lineno);
    if (fields.size() != order + 2)
      throw ParseError(std::string(tag) + " takes " + std::to_string(order) + " indices and a value", lineno);
    std::vector<AtomIndex> key;
    for (std::size_t i = 0; i < order; ++i) {
      const AtomIndex idx = parse_index(fields[1 + i], lineno);
      if (idx >= atoms->size())
        throw ParseError("atom index " + std::to_string(idx) + " out of range", lineno);
      if (!key.empty() && idx <= key.back())
        throw ParseError("non-ascending key", lineno);
      key.push_back(idx);
    }
    if (!seen.insert(key).second)
      throw ParseError("duplicate key", lineno);
    s.set(key, parse_real(fields.back(), lineno));
  }
  if (!atoms)
    throw ParseError("synapse file has no 'atoms:' header");
  if (atoms_out)
    *atoms_out = std::move(*atoms);
  return s;
}

std::string write_synapses(const SynapseSet &s, const AtomTable &atoms) {
  if (atoms.size() != s.n_atoms())
    throw StructuralError("atom table does not match the synapse set");
  std::ostringstream out;
  out << "atoms:";
  for (const auto &name : atoms.names())
    out << ' ' << name;
  out << '\n';
  out << "E0 " << format_real(s.offset()) << '\n';
  for (const auto &[i, v] : s.order1())
    out << "T1 " << i << ' ' << format_real(v) << '\n';
  for (const auto &[k, v] : s.order2())
    out << "T2 " << k[0] << ' ' << k[1] << ' ' << format_real(v) << '\n';
  for (const auto &[k, v] : s.order3())
    out << "T3 " << k[0] << ' ' << k[1] << ' ' << k[2] << ' ' << format_real(v) << '\n';
  return out.str();
}

namespace {

void write_rule_lines(std::ostringstream &out, const std::vector<MinedRule> &rules, const AtomTable &atoms) {
  for (const auto &r : rules) {
    out << format_clause(r.clause, atoms) << "\tweight=" << format_short(r.weight) << "\tpass=" << r.pass;
    if (r.support)
      out << "\tsupport=" << *r.support;
    if (r.confidence)
      out << "\tconfidence=" << format_short(*r.confidence);
    out << "\tambiguous=" << (r.ambiguous_head ? "true" : "false") << '\n';
  }
}

} // namespace

std::string write_rules(const MineResult &result, const AtomTable &atoms) {
  std::ostringstream out;
  write_rule_lines(out, result.rules, atoms);
  if (!result.dropped.empty()) {
    out << "# dropped\n";
    write_rule_lines(out, result.dropped, atoms);
  }
  out << "# residual\n";
  for (const auto &e : result.residual.entries) {
    out << 'T' << e.key.size();
    for (AtomIndex i : e.key)
      out << ' ' << atoms.name(i);
    out << '\t' << format_short(e.value) << '\n';
  }
  out << "# l1 order3=" << format_short(result.residual.l1_norm[2])
      << " order2=" << format_short(result.residual.l1_norm[1])
      << " order1=" << format_short(result.residual.l1_norm[0]) << '\n';
  return out.str();
}

std::vector<Clause> read_rule_clauses(std::string_view text, const AtomTable &atoms) {
  std::vector<Clause> clauses;
  AtomTable table = atoms;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = trim(lines[n]);
    if (line.substr(0, 9) == "# dropped" || line.substr(0, 10) == "# residual")
      break;
    if (line.empty() || line.front() == '#')
      continue;
    const auto clause_text = line.substr(0, line.find('\t'));
    clauses.push_back(parse_clause(clause_text, table, false, n + 1));
  }
  return clauses;
}

std::string write_solutions(const std::vector<Interpretation> &models, const AtomTable &atoms,
                            std::size_t restarts, std::size_t successes) {
  std::string out = "# restarts=" + std::to_string(restarts) + " successes=" + std::to_string(successes) +
                    " distinct=" + std::to_string(models.size()) + "\n";
  const auto &names = atoms.names();
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? "," : "") + names[i];
  out += "\n";
  for (const auto &m : models) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i)
        out += ',';
      out += m[i] ? '1' : '0';
    }
    out += "\n";
  }
  return out;
}

} // namespace logicmine
