#include "logicmine/translate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logicmine/error.hpp"

namespace logicmine {

Polynomial Polynomial::constant(double c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::linear(double a, double b, AtomIndex i) {
  Polynomial p;
  p.add_term({}, a);
  p.add_term({i}, b);
  return p;
}

void Polynomial::add_term(Monomial m, double coefficient) {
  std::sort(m.begin(), m.end());
  if (std::adjacent_find(m.begin(), m.end()) != m.end())
    throw StructuralError("monomial repeats an atom");
  if (m.size() > 3)
    throw UnsupportedOrderError("monomial of degree " + std::to_string(m.size()) + " needs connections above third order");
  auto [it, inserted] = terms_.try_emplace(std::move(m), 0.0);
  it->second += coefficient;
  if (std::abs(it->second) <= prune_tolerance)
    terms_.erase(it);
}

double Polynomial::coefficient(const Monomial &m) const {
  Monomial key = m;
  std::sort(key.begin(), key.end());
  auto it = terms_.find(key);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::evaluate(const Interpretation &x, Representation r) const {
  double total = 0.0;
  for (const auto &[m, c] : terms_) {
    double v = c;
    for (AtomIndex i : m)
      v *= x.numeric(i, r);
    total += v;
  }
  return total;
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator*=(double s) {
  Polynomial scaled;
  for (const auto &[m, c] : terms_)
    scaled.add_term(m, c * s);
  *this = std::move(scaled);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  Polynomial out;
  for (const auto &[ma, ca] : a.terms_) {
    for (const auto &[mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

Polynomial clause_cost(const Clause &c, Representation r) {
  const std::size_t literals = c.literal_count();
  if (literals > 3)
    throw UnsupportedOrderError("clause with " + std::to_string(literals) +
                                " literals needs connections above third order");
  Polynomial cost = Polynomial::constant(1.0);
  if (r == Representation::binary01) {
    if (c.head())
      cost = cost * Polynomial::linear(1.0, -1.0, *c.head());
    for (AtomIndex b : c.body())
      cost = cost * Polynomial::linear(0.0, 1.0, b);
  } else {
    if (c.head())
      cost = cost * Polynomial::linear(0.5, -0.5, *c.head());
    for (AtomIndex b : c.body())
      cost = cost * Polynomial::linear(0.5, 0.5, b);
  }
  return cost;
}

void add_polynomial(SynapseSet &s, const Polynomial &poly) {
  for (const auto &[m, c] : poly.terms()) {
    switch (m.size()) {
    case 0:
      s.add_offset(c);
      break;
    case 3:
      s.add(m, -c / 2.0);
      break;
    default:
      s.add(m, -c);
    }
  }
}

SynapseSet compile(const Program &p, Representation r) {
  SynapseSet s(p.atom_count());
  for (const auto &c : p.clauses())
    add_polynomial(s, clause_cost(c, r));
  return s;
}

} // namespace logicmine
