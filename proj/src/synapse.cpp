#include "logicmine/synapse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logicmine/error.hpp"

namespace logicmine {

namespace {

template <std::size_t N> std::array<AtomIndex, N> sorted_key(std::span<const AtomIndex> key) {
  std::array<AtomIndex, N> k{};
  std::copy(key.begin(), key.end(), k.begin());
  std::sort(k.begin(), k.end());
  return k;
}

template <class Map, class K> void accumulate_entry(Map &m, const K &key, double delta) {
  auto [it, inserted] = m.try_emplace(key, 0.0);
  it->second += delta;
  if (std::abs(it->second) <= prune_tolerance)
    m.erase(it);
}

template <class Map, class K> void assign_entry(Map &m, const K &key, double value) {
  if (std::abs(value) <= prune_tolerance)
    m.erase(key);
  else
    m[key] = value;
}

template <class Map> double lookup(const Map &m, const typename Map::key_type &key) {
  auto it = m.find(key);
  return it == m.end() ? 0.0 : it->second;
}

bool has_repeat(std::span<const AtomIndex> key) {
  for (std::size_t a = 0; a < key.size(); ++a)
    for (std::size_t b = a + 1; b < key.size(); ++b)
      if (key[a] == key[b])
        return true;
  return false;
}

} // namespace

void SynapseSet::check_key(std::span<const AtomIndex> key) const {
  if (key.empty())
    throw StructuralError("connection key must name at least one atom");
  if (key.size() > 3)
    throw UnsupportedOrderError("connections above third order are not supported");
  for (AtomIndex i : key)
    if (i >= n_atoms_)
      throw StructuralError("atom index " + std::to_string(i) + " out of range for " + std::to_string(n_atoms_) +
                            " atoms");
}

void SynapseSet::check_size(std::size_t n) const {
  if (n != n_atoms_)
    throw StructuralError("state has " + std::to_string(n) + " atoms, synapses expect " + std::to_string(n_atoms_));
}

double SynapseSet::get(std::span<const AtomIndex> key) const {
  check_key(key);
  if (has_repeat(key))
    return 0.0;
  switch (key.size()) {
  case 1:
    return lookup(t1_, key[0]);
  case 2:
    return lookup(t2_, sorted_key<2>(key));
  default:
    return lookup(t3_, sorted_key<3>(key));
  }
}

void SynapseSet::add(std::span<const AtomIndex> key, double delta) {
  check_key(key);
  if (has_repeat(key))
    throw DiagonalWriteError("connection key has a repeated atom index");
  switch (key.size()) {
  case 1:
    accumulate_entry(t1_, key[0], delta);
    break;
  case 2:
    accumulate_entry(t2_, sorted_key<2>(key), delta);
    break;
  default:
    accumulate_entry(t3_, sorted_key<3>(key), delta);
  }
}

void SynapseSet::set(std::span<const AtomIndex> key, double value) {
  check_key(key);
  if (has_repeat(key))
    throw DiagonalWriteError("connection key has a repeated atom index");
  switch (key.size()) {
  case 1:
    assign_entry(t1_, key[0], value);
    break;
  case 2:
    assign_entry(t2_, sorted_key<2>(key), value);
    break;
  default:
    assign_entry(t3_, sorted_key<3>(key), value);
  }
}

double SynapseSet::energy(std::span<const double> x) const {
  check_size(x.size());
  double e = 0.0;
  for (const auto &[k, t] : t3_)
    e -= 2.0 * t * x[k[0]] * x[k[1]] * x[k[2]];
  for (const auto &[k, t] : t2_)
    e -= t * x[k[0]] * x[k[1]];
  for (const auto &[i, t] : t1_)
    e -= t * x[i];
  return e;
}

double SynapseSet::energy(const Interpretation &x, Representation r) const {
  const auto v = x.numeric_view(r);
  return energy(v);
}

double SynapseSet::local_field(std::span<const double> x, AtomIndex i) const {
  check_size(x.size());
  if (i >= n_atoms_)
    throw StructuralError("atom index " + std::to_string(i) + " out of range");
  double h = 0.0;
  for (const auto &[k, t] : t3_) {
    if (k[0] == i)
      h += 2.0 * t * x[k[1]] * x[k[2]];
    else if (k[1] == i)
      h += 2.0 * t * x[k[0]] * x[k[2]];
    else if (k[2] == i)
      h += 2.0 * t * x[k[0]] * x[k[1]];
  }
  for (const auto &[k, t] : t2_) {
    if (k[0] == i)
      h += t * x[k[1]];
    else if (k[1] == i)
      h += t * x[k[0]];
  }
  h += lookup(t1_, i);
  return h;
}

double SynapseSet::local_field(const Interpretation &x, Representation r, AtomIndex i) const {
  const auto v = x.numeric_view(r);
  return local_field(v, i);
}

void SynapseSet::accumulate(const SynapseSet &other, double scale) {
  if (other.n_atoms_ > n_atoms_)
    n_atoms_ = other.n_atoms_;
  for (const auto &[k, t] : other.t1_)
    accumulate_entry(t1_, k, scale * t);
  for (const auto &[k, t] : other.t2_)
    accumulate_entry(t2_, k, scale * t);
  for (const auto &[k, t] : other.t3_)
    accumulate_entry(t3_, k, scale * t);
  offset_ += scale * other.offset_;
}

double SynapseSet::max_abs_difference(const SynapseSet &other, bool include_offset) const {
  SynapseSet diff = *this;
  diff -= other;
  double m = include_offset ? std::abs(diff.offset_) : 0.0;
  for (const auto &[k, t] : diff.t1_)
    m = std::max(m, std::abs(t));
  for (const auto &[k, t] : diff.t2_)
    m = std::max(m, std::abs(t));
  for (const auto &[k, t] : diff.t3_)
    m = std::max(m, std::abs(t));
  return m;
}

} // namespace logicmine
