#pragma once

// Clause cost functions and their compilation into connection strengths.

#include <map>
#include <vector>

#include "logicmine/logic.hpp"
#include "logicmine/synapse.hpp"

namespace logicmine {

// Multilinear polynomial over atoms with monomials of degree 0-3.
// A monomial is its ascending atom list; the empty list is the constant.
class Polynomial {
public:
  using Monomial = std::vector<AtomIndex>;

  Polynomial() = default;
  static Polynomial constant(double c);
  // a + b * x_i
  static Polynomial linear(double a, double b, AtomIndex i);

  void add_term(Monomial m, double coefficient);
  double coefficient(const Monomial &m) const;
  const std::map<Monomial, double> &terms() const { return terms_; }

  double evaluate(const Interpretation &x, Representation r) const;

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator*=(double s);
  // Product of polynomials over disjoint atom sets; throws above degree 3
  // or when a monomial would repeat an atom.
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

  bool operator==(const Polynomial &other) const = default;

private:
  std::map<Monomial, double> terms_;
};

// Expanded cost of one clause: 1 on violating assignments, 0 elsewhere.
//   binary:  (1 - V_h) * prod_b V_b
//   bipolar: 2^-L (1 - S_h) * prod_b (1 + S_b)
// Throws UnsupportedOrderError when the clause has more than 3 literals.
Polynomial clause_cost(const Clause &c, Representation r);

// Matches polynomial coefficients against the SynapseSet energy:
// degree 3 c -> T_ijk -= c/2, degree 2 c -> T_ij -= c, degree 1 c -> T_i -= c,
// constant c -> offset += c. The 1/2 at degree 3 is the -1/3 prefactor times
// the 3! permuted copies of each triple (2 copies times -1/2 for pairs).
void add_polynomial(SynapseSet &s, const Polynomial &poly);

// energy_total(compile(p, r), x, r) == cost(p, x) for every x.
SynapseSet compile(const Program &p, Representation r);

} // namespace logicmine
