#pragma once

// Sparse symmetric zero-diagonal connection strengths of orders 1-3.
//
// Only canonical (strictly ascending) keys are stored, so T_ij = T_ji,
// T_ijk = T_[ijk] and the zero diagonal hold by construction. With that
// storage the energy reads
//
//   E = - sum_{i<j<k} 2 T_ijk x_i x_j x_k - sum_{i<j} T_ij x_i x_j - sum_i T_i x_i
//
// which is the permutation-summed form -1/3 sum T_ijk xxx - 1/2 sum T_ij xx - sum T_i x
// with the 3! and 2! copies folded in. The local field is h_i = -dE/dx_i.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "logicmine/logic.hpp"

namespace logicmine {

using Key2 = std::array<AtomIndex, 2>;
using Key3 = std::array<AtomIndex, 3>;

inline constexpr double prune_tolerance = 1e-15;

class SynapseSet {
public:
  SynapseSet() = default;
  explicit SynapseSet(std::size_t n_atoms) : n_atoms_(n_atoms) {}

  std::size_t n_atoms() const { return n_atoms_; }

  // Permutation-invariant read. Keys with a repeated index read as 0.
  double get(std::span<const AtomIndex> key) const;
  double get(std::initializer_list<AtomIndex> key) const { return get(std::span(key.begin(), key.size())); }

  // Accumulates into the canonical entry; near-zero results are erased.
  void add(std::span<const AtomIndex> key, double delta);
  void add(std::initializer_list<AtomIndex> key, double delta) { add(std::span(key.begin(), key.size()), delta); }
  void set(std::span<const AtomIndex> key, double value);
  void set(std::initializer_list<AtomIndex> key, double value) { set(std::span(key.begin(), key.size()), value); }

  double offset() const { return offset_; }
  void set_offset(double e0) { offset_ = e0; }
  void add_offset(double delta) { offset_ += delta; }

  const std::map<AtomIndex, double> &order1() const { return t1_; }
  const std::map<Key2, double> &order2() const { return t2_; }
  const std::map<Key3, double> &order3() const { return t3_; }

  std::size_t nonzero_count() const { return t1_.size() + t2_.size() + t3_.size(); }
  bool empty_connections() const { return nonzero_count() == 0; }

  double energy(std::span<const double> x) const;
  double energy(const Interpretation &x, Representation r) const;
  double energy_total(const Interpretation &x, Representation r) const { return energy(x, r) + offset_; }

  double local_field(std::span<const double> x, AtomIndex i) const;
  double local_field(const Interpretation &x, Representation r, AtomIndex i) const;

  // this += scale * other (connections and offset).
  void accumulate(const SynapseSet &other, double scale = 1.0);
  SynapseSet &operator+=(const SynapseSet &other) {
    accumulate(other, 1.0);
    return *this;
  }
  SynapseSet &operator-=(const SynapseSet &other) {
    accumulate(other, -1.0);
    return *this;
  }

  // Largest absolute entrywise difference, optionally including the offset.
  double max_abs_difference(const SynapseSet &other, bool include_offset = true) const;

  bool operator==(const SynapseSet &other) const = default;

private:
  void check_key(std::span<const AtomIndex> key) const;
  void check_size(std::size_t n) const;

  std::size_t n_atoms_ = 0;
  std::map<AtomIndex, double> t1_;
  std::map<Key2, double> t2_;
  std::map<Key3, double> t3_;
  double offset_ = 0.0;
};

inline SynapseSet operator+(SynapseSet a, const SynapseSet &b) { return a += b; }
inline SynapseSet operator-(SynapseSet a, const SynapseSet &b) { return a -= b; }

} // namespace logicmine
