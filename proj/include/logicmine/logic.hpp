#pragma once

// Propositional Horn clauses over a named atom table, truth assignments,
// violated-clause counting and exhaustive model enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace logicmine {

using AtomIndex = std::uint32_t;

// Numeric view of a truth value: {0,1} or {-1,+1}.
enum class Representation { binary01, bipolar };

std::string_view to_string(Representation r);

bool is_identifier(std::string_view name);

class AtomTable {
public:
  AtomTable() = default;
  explicit AtomTable(std::vector<std::string> names);

  // Registers a new atom; throws if the name is invalid or already present.
  AtomIndex add(std::string name);
  // Returns the existing index, or registers the name.
  AtomIndex intern(std::string_view name);
  std::optional<AtomIndex> find(std::string_view name) const;

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string &name(AtomIndex i) const;
  const std::vector<std::string> &names() const { return names_; }

  bool operator==(const AtomTable &other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomIndex> index_;
};

// head <- body. Body is kept strictly ascending; the head never occurs in it.
class Clause {
public:
  Clause(std::optional<AtomIndex> head, std::vector<AtomIndex> body);

  static Clause fact(AtomIndex head) { return Clause(head, {}); }
  static Clause rule(AtomIndex head, std::vector<AtomIndex> body) { return Clause(head, std::move(body)); }
  static Clause denial(std::vector<AtomIndex> body) { return Clause(std::nullopt, std::move(body)); }

  const std::optional<AtomIndex> &head() const { return head_; }
  const std::vector<AtomIndex> &body() const { return body_; }

  std::size_t literal_count() const { return body_.size() + (head_ ? 1 : 0); }
  bool is_definite() const { return head_.has_value(); }
  bool is_fact() const { return head_.has_value() && body_.empty(); }
  bool is_denial() const { return !head_.has_value(); }

  // All atoms of the clause, ascending.
  std::vector<AtomIndex> atoms() const;
  AtomIndex max_atom() const;

  bool operator==(const Clause &other) const = default;
  auto operator<=>(const Clause &other) const = default;

private:
  std::optional<AtomIndex> head_;
  std::vector<AtomIndex> body_;
};

class Interpretation {
public:
  Interpretation() = default;
  explicit Interpretation(std::size_t n, bool value = false) : values_(n, value ? 1 : 0) {}
  explicit Interpretation(std::vector<bool> values);

  // Atom i takes bit i of `bits`.
  static Interpretation from_bits(std::uint64_t bits, std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool operator[](std::size_t i) const { return values_[i] != 0; }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool v) { values_.at(i) = v ? 1 : 0; }
  void flip(std::size_t i) { values_.at(i) ^= 1; }

  double numeric(std::size_t i, Representation r) const {
    const double v = values_[i] ? 1.0 : 0.0;
    return r == Representation::binary01 ? v : 2.0 * v - 1.0;
  }
  // s_i = 2 V_i - 1
  int bipolar(std::size_t i) const { return values_[i] ? 1 : -1; }
  std::vector<double> numeric_view(Representation r) const;

  // Binary counting key, atom 0 least significant. Requires size() <= 64.
  std::uint64_t bits() const;

  bool operator==(const Interpretation &other) const = default;

private:
  std::vector<std::uint8_t> values_;
};

class Program {
public:
  Program() = default;
  explicit Program(AtomTable atoms) : atoms_(std::move(atoms)) {}
  Program(AtomTable atoms, std::vector<Clause> clauses);

  void add_clause(Clause c);

  const AtomTable &atoms() const { return atoms_; }
  AtomTable &atoms() { return atoms_; }
  const std::vector<Clause> &clauses() const { return clauses_; }
  std::size_t atom_count() const { return atoms_.size(); }

  bool operator==(const Program &other) const = default;

private:
  AtomTable atoms_;
  std::vector<Clause> clauses_;
};

// Binary counting order with atom 0 least significant; any size.
bool binary_less(const Interpretation &a, const Interpretation &b);

bool evaluate_clause(const Clause &c, const Interpretation &x);

// Number of violated clauses; zero exactly on models.
std::size_t cost(const Program &p, const Interpretation &x);

inline constexpr std::size_t default_enumeration_limit = 20;

// All models of p in ascending binary order.
std::vector<Interpretation> enumerate_models(const Program &p,
                                             std::size_t max_atoms = default_enumeration_limit);

} // namespace logicmine
