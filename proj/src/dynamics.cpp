#include "logicmine/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "logicmine/error.hpp"
#include "logicmine/translate.hpp"

namespace logicmine {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// std::shuffle and the std distributions are implementation-defined;
// mt19937_64's raw stream is not, so the permutation is built from it directly.
void seeded_permutation(std::vector<AtomIndex> &order, std::mt19937_64 &rng) {
  std::iota(order.begin(), order.end(), AtomIndex{0});
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

// Value the update rule assigns for field h, or the current value on a tie.
double updated_value(double h, double current, Representation r) {
  if (h > 0.0)
    return 1.0;
  if (h < 0.0)
    return r == Representation::bipolar ? -1.0 : 0.0;
  return current;
}

Interpretation from_numeric(const std::vector<double> &x) {
  Interpretation out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.set(i, x[i] > 0.0);
  return out;
}

} // namespace

bool is_fixed_point(const SynapseSet &s, const Interpretation &x, Representation r) {
  const auto v = x.numeric_view(r);
  for (AtomIndex i = 0; i < v.size(); ++i)
    if (updated_value(s.local_field(v, i), v[i], r) != v[i])
      return false;
  return true;
}

RelaxResult relax(const SynapseSet &s, const Interpretation &x0, const RelaxConfig &cfg) {
  if (cfg.max_sweeps < 1)
    throw Error("max_sweeps must be at least 1");
  if (x0.size() != s.n_atoms())
    throw StructuralError("initial state size does not match the synapse set");

  const Representation r = cfg.representation;
  std::vector<double> x = x0.numeric_view(r);
  std::mt19937_64 rng(cfg.seed);
  std::vector<AtomIndex> order(x.size());

  RelaxResult result;
  result.initial_energy = s.energy(x) + s.offset();

  bool quiet = false;
  while (result.sweeps_used < cfg.max_sweeps && !quiet) {
    seeded_permutation(order, rng);
    ++result.sweeps_used;
    quiet = true;
    for (AtomIndex i : order) {
      const double next = updated_value(s.local_field(x, i), x[i], r);
      if (next == x[i])
        continue;
      x[i] = next;
      quiet = false;
      result.energy_trace.push_back(s.energy(x) + s.offset());
    }
  }

  result.final_state = from_numeric(x);
  result.stable = quiet || is_fixed_point(s, result.final_state, r);
  return result;
}

SolveResult solve(const Program &p, const SolveConfig &cfg) {
  const SynapseSet s = compile(p, cfg.representation);
  const std::size_t n = p.atom_count();

  SolveResult out;
  out.stats.restarts = cfg.restarts;
  std::vector<Interpretation> found;
  for (std::size_t restart = 0; restart < cfg.restarts; ++restart) {
    const std::uint64_t stream = splitmix64(cfg.seed ^ splitmix64(restart));
    std::mt19937_64 rng(stream);
    Interpretation x0(n);
    for (std::size_t i = 0; i < n; ++i)
      x0.set(i, (rng() >> 63) != 0);

    RelaxConfig rc;
    rc.max_sweeps = cfg.max_sweeps;
    rc.seed = rng();
    rc.representation = cfg.representation;
    auto relaxed = relax(s, x0, rc);
    if (cost(p, relaxed.final_state) == 0) {
      ++out.stats.successes;
      found.push_back(std::move(relaxed.final_state));
    }
  }

  std::sort(found.begin(), found.end(), binary_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.stats.distinct_models = found.size();
  out.models = std::move(found);
  return out;
}

} // namespace logicmine
