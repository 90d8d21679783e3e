#include "logicmine/hebb.hpp"

#include <string>

#include "logicmine/error.hpp"

namespace logicmine {

EventTable::EventTable(AtomTable atoms, std::vector<Interpretation> records)
    : atoms_(std::move(atoms)), records_(std::move(records)) {
  if (records_.empty())
    throw StructuralError("event table needs at least one record");
  for (std::size_t r = 0; r < records_.size(); ++r)
    if (records_[r].size() != atoms_.size())
      throw StructuralError("record " + std::to_string(r + 1) + " has " + std::to_string(records_[r].size()) +
                            " values, expected " + std::to_string(atoms_.size()));
}

EventTable model_events(const Program &p, std::size_t max_atoms) {
  auto models = enumerate_models(p, max_atoms);
  if (models.empty())
    throw StructuralError("program has no model");
  return EventTable(p.atoms(), std::move(models));
}

double LearningRates::for_order(std::size_t order) const {
  switch (order) {
  case 1:
    return a1;
  case 2:
    return a2;
  case 3:
    return a3;
  default:
    throw UnsupportedOrderError("no learning rate for order " + std::to_string(order));
  }
}

void LearningRates::validate() const {
  if (!(a1 > 0.0) || !(a2 > 0.0) || !(a3 > 0.0))
    throw Error("learning rates must be strictly positive");
}

SynapseSet learn(const EventTable &ev, const LearningRates &rates, std::size_t max_atoms) {
  rates.validate();
  const std::size_t n = ev.atom_count();
  if (n == 0)
    throw StructuralError("event table has no atoms");
  if (n > max_atoms)
    throw CapacityError("learning over " + std::to_string(n) + " atoms exceeds the limit of " +
                        std::to_string(max_atoms));

  // Integer tallies of the sign products; every product is +-1 so the sums
  // are exact and independent of record order.
  std::vector<long long> sum1(n, 0);
  std::vector<long long> sum2(n * n, 0);
  std::vector<long long> sum3(n * n * n, 0);
  std::vector<int> sigma(n);
  for (const auto &record : ev.records()) {
    for (std::size_t i = 0; i < n; ++i)
      sigma[i] = record.bipolar(i);
    for (std::size_t i = 0; i < n; ++i) {
      sum1[i] += sigma[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        const int sij = sigma[i] * sigma[j];
        sum2[i * n + j] += sij;
        for (std::size_t k = j + 1; k < n; ++k)
          sum3[(i * n + j) * n + k] += sij * sigma[k];
      }
    }
  }

  SynapseSet s(n);
  for (AtomIndex i = 0; i < n; ++i) {
    if (sum1[i] != 0)
      s.set({i}, rates.a1 * static_cast<double>(sum1[i]));
    for (AtomIndex j = i + 1; j < n; ++j) {
      if (const auto v = sum2[i * n + j]; v != 0)
        s.set({i, j}, rates.a2 * static_cast<double>(v));
      for (AtomIndex k = j + 1; k < n; ++k)
        if (const auto v = sum3[(i * n + j) * n + k]; v != 0)
          s.set({i, j, k}, rates.a3 * static_cast<double>(v));
    }
  }
  return s;
}

namespace {

SynapseSet signature(const Clause &c, const LearningRates &rates, std::size_t n_atoms) {
  rates.validate();
  if (c.literal_count() > 3)
    throw UnsupportedOrderError("clause signatures exist only up to three literals");
  if (c.max_atom() >= n_atoms)
    throw StructuralError("clause does not fit in " + std::to_string(n_atoms) + " atoms");

  const auto atoms = c.atoms();
  auto violating_sign = [&](AtomIndex a) { return c.head() && *c.head() == a ? -1.0 : 1.0; };

  SynapseSet s(n_atoms);
  const std::size_t m = atoms.size();
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    std::vector<AtomIndex> key;
    double product = 1.0;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (1U << b)) {
        key.push_back(atoms[b]);
        product *= violating_sign(atoms[b]);
      }
    }
    s.add(key, -rates.for_order(key.size()) * product);
  }
  return s;
}

} // namespace

SynapseSet single_clause_signature(const Clause &c, const LearningRates &rates, std::size_t n_atoms) {
  if (!c.is_definite())
    throw StructuralError("single-clause signatures are defined for definite clauses");
  return signature(c, rates, n_atoms);
}

SynapseSet single_clause_signature(const Clause &c, const LearningRates &rates) {
  return single_clause_signature(c, rates, static_cast<std::size_t>(c.max_atom()) + 1);
}

SynapseSet denial_signature(const Clause &c, const LearningRates &rates, std::size_t n_atoms) {
  if (!c.is_denial())
    throw StructuralError("denial signatures are defined for headless clauses");
  return signature(c, rates, n_atoms);
}

} // namespace logicmine
