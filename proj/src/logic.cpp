#include "logicmine/logic.hpp"

#include <algorithm>
#include <cctype>

#include "logicmine/error.hpp"

namespace logicmine {

std::string_view to_string(Representation r) {
  return r == Representation::binary01 ? "binary" : "bipolar";
}

bool is_identifier(std::string_view name) {
  if (name.empty())
    return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_')
    return false;
  return std::all_of(name.begin() + 1, name.end(), [](char ch) {
    const auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_';
  });
}

AtomTable::AtomTable(std::vector<std::string> names) {
  names_.reserve(names.size());
  for (auto &n : names)
    add(std::move(n));
}

AtomIndex AtomTable::add(std::string name) {
  if (!is_identifier(name))
    throw StructuralError("invalid atom name '" + name + "'");
  if (index_.count(name))
    throw StructuralError("duplicate atom name '" + name + "'");
  const auto i = static_cast<AtomIndex>(names_.size());
  index_.emplace(name, i);
  names_.push_back(std::move(name));
  return i;
}

AtomIndex AtomTable::intern(std::string_view name) {
  if (auto i = find(name))
    return *i;
  return add(std::string(name));
}

std::optional<AtomIndex> AtomTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

const std::string &AtomTable::name(AtomIndex i) const {
  if (i >= names_.size())
    throw StructuralError("atom index " + std::to_string(i) + " out of range");
  return names_[i];
}

Clause::Clause(std::optional<AtomIndex> head, std::vector<AtomIndex> body)
    : head_(head), body_(std::move(body)) {
  std::sort(body_.begin(), body_.end());
  if (std::adjacent_find(body_.begin(), body_.end()) != body_.end())
    throw StructuralError("duplicate atom in clause body");
  if (head_ && std::binary_search(body_.begin(), body_.end(), *head_))
    throw StructuralError("clause head also occurs in its body");
  if (literal_count() == 0)
    throw StructuralError("empty clause");
}

std::vector<AtomIndex> Clause::atoms() const {
  std::vector<AtomIndex> all = body_;
  if (head_)
    all.insert(std::upper_bound(all.begin(), all.end(), *head_), *head_);
  return all;
}

AtomIndex Clause::max_atom() const {
  AtomIndex m = body_.empty() ? 0 : body_.back();
  if (head_)
    m = std::max(m, *head_);
  return m;
}

Interpretation::Interpretation(std::vector<bool> values) : values_(values.begin(), values.end()) {}

Interpretation Interpretation::from_bits(std::uint64_t bits, std::size_t n) {
  Interpretation x(n);
  for (std::size_t i = 0; i < n && i < 64; ++i)
    x.values_[i] = (bits >> i) & 1U;
  return x;
}

bool Interpretation::at(std::size_t i) const {
  if (i >= values_.size())
    throw StructuralError("atom index " + std::to_string(i) + " out of range for interpretation of size " +
                          std::to_string(values_.size()));
  return values_[i] != 0;
}

std::vector<double> Interpretation::numeric_view(Representation r) const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out[i] = numeric(i, r);
  return out;
}

std::uint64_t Interpretation::bits() const {
  if (values_.size() > 64)
    throw CapacityError("interpretation too large for a 64-bit key");
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    b |= static_cast<std::uint64_t>(values_[i]) << i;
  return b;
}

Program::Program(AtomTable atoms, std::vector<Clause> clauses) : atoms_(std::move(atoms)) {
  clauses_.reserve(clauses.size());
  for (auto &c : clauses)
    add_clause(std::move(c));
}

void Program::add_clause(Clause c) {
  if (c.max_atom() >= atoms_.size())
    throw StructuralError("clause refers to atom " + std::to_string(c.max_atom()) + " but the program has " +
                          std::to_string(atoms_.size()) + " atoms");
  clauses_.push_back(std::move(c));
}

bool binary_less(const Interpretation &a, const Interpretation &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return b[i];
  return false;
}

bool evaluate_clause(const Clause &c, const Interpretation &x) {
  if (c.max_atom() >= x.size())
    throw StructuralError("interpretation does not cover the clause's atoms");
  if (c.head() && x.at(*c.head()))
    return true;
  for (AtomIndex b : c.body())
    if (!x.at(b))
      return true;
  return false;
}

std::size_t cost(const Program &p, const Interpretation &x) {
  if (x.size() < p.atom_count())
    throw StructuralError("interpretation does not cover the program's atoms");
  std::size_t violated = 0;
  for (const auto &c : p.clauses())
    if (!evaluate_clause(c, x))
      ++violated;
  return violated;
}

std::vector<Interpretation> enumerate_models(const Program &p, std::size_t max_atoms) {
  const std::size_t n = p.atom_count();
  if (n > max_atoms || n >= 63)
    throw CapacityError("model enumeration over " + std::to_string(n) + " atoms exceeds the limit of " +
                        std::to_string(max_atoms));
  std::vector<Interpretation> models;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto x = Interpretation::from_bits(bits, n);
    if (cost(p, x) == 0)
      models.push_back(std::move(x));
  }
  return models;
}

} // namespace logicmine
