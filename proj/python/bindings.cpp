#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <tuple>

#include "logicmine/dynamics.hpp"
#include "logicmine/error.hpp"
#include "logicmine/hebb.hpp"
#include "logicmine/mine.hpp"
#include "logicmine/text.hpp"
#include "logicmine/translate.hpp"

namespace py = pybind11;
using namespace logicmine;

namespace {

std::vector<bool> values_of(const Interpretation &x) {
  std::vector<bool> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    v[i] = x[i];
  return v;
}

std::vector<std::vector<bool>> values_of(const std::vector<Interpretation> &xs) {
  std::vector<std::vector<bool>> out;
  out.reserve(xs.size());
  for (const auto &x : xs)
    out.push_back(values_of(x));
  return out;
}

py::dict order1_dict(const SynapseSet &s) {
  py::dict d;
  for (const auto &[i, v] : s.order1())
    d[py::make_tuple(i)] = v;
  return d;
}

py::dict order2_dict(const SynapseSet &s) {
  py::dict d;
  for (const auto &[k, v] : s.order2())
    d[py::make_tuple(k[0], k[1])] = v;
  return d;
}

py::dict order3_dict(const SynapseSet &s) {
  py::dict d;
  for (const auto &[k, v] : s.order3())
    d[py::make_tuple(k[0], k[1], k[2])] = v;
  return d;
}

} // namespace

PYBIND11_MODULE(_logicmine, m) {
  m.doc() = "Horn-clause compilation into a third-order Hopfield network, relaxation, "
            "Hebbian learning and rule mining.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());

  py::enum_<Representation>(m, "Representation")
      .value("binary", Representation::binary01)
      .value("bipolar", Representation::bipolar);

  py::class_<AtomTable>(m, "AtomTable")
      .def(py::init<>())
      .def(py::init<std::vector<std::string>>(), py::arg("names"))
      .def("add", &AtomTable::add)
      .def("find", &AtomTable::find)
      .def("name", &AtomTable::name)
      .def_property_readonly("names", &AtomTable::names)
      .def("__len__", &AtomTable::size)
      .def(py::self == py::self);

  py::class_<Clause>(m, "Clause")
      .def(py::init<std::optional<AtomIndex>, std::vector<AtomIndex>>(), py::arg("head"), py::arg("body"))
      .def_static("fact", &Clause::fact)
      .def_static("rule", &Clause::rule)
      .def_static("denial", &Clause::denial)
      .def_property_readonly("head", &Clause::head)
      .def_property_readonly("body", &Clause::body)
      .def_property_readonly("literal_count", &Clause::literal_count)
      .def("is_denial", &Clause::is_denial)
      .def(py::self == py::self)
      .def("__repr__", [](const Clause &c) {
        std::string s = "Clause(";
        s += c.head() ? std::to_string(*c.head()) : "None";
        s += ", [";
        for (std::size_t i = 0; i < c.body().size(); ++i)
          s += (i ? ", " : "") + std::to_string(c.body()[i]);
        return s + "])";
      });

  py::class_<Interpretation>(m, "Interpretation")
      .def(py::init<std::vector<bool>>(), py::arg("values"))
      .def("__len__", &Interpretation::size)
      .def("__getitem__", &Interpretation::at)
      .def("values", [](const Interpretation &x) { return values_of(x); })
      .def(py::self == py::self);
  py::implicitly_convertible<std::vector<bool>, Interpretation>();

  py::class_<Program>(m, "Program")
      .def(py::init<AtomTable, std::vector<Clause>>(), py::arg("atoms"), py::arg("clauses"))
      .def_property_readonly("atoms", py::overload_cast<>(&Program::atoms, py::const_))
      .def_property_readonly("clauses", &Program::clauses)
      .def_property_readonly("atom_count", &Program::atom_count)
      .def("__str__", &print_program);

  py::class_<SynapseSet>(m, "SynapseSet")
      .def(py::init<std::size_t>(), py::arg("n_atoms"))
      .def_property_readonly("n_atoms", &SynapseSet::n_atoms)
      .def_property("offset", &SynapseSet::offset, &SynapseSet::set_offset)
      .def("get", [](const SynapseSet &s, const std::vector<AtomIndex> &key) { return s.get(key); })
      .def("set", [](SynapseSet &s, const std::vector<AtomIndex> &key, double v) { s.set(key, v); })
      .def("order1", &order1_dict)
      .def("order2", &order2_dict)
      .def("order3", &order3_dict)
      .def("energy", py::overload_cast<const Interpretation &, Representation>(&SynapseSet::energy, py::const_))
      .def("energy_total", &SynapseSet::energy_total)
      .def("local_field",
           py::overload_cast<const Interpretation &, Representation, AtomIndex>(&SynapseSet::local_field, py::const_))
      .def("max_abs_difference", &SynapseSet::max_abs_difference, py::arg("other"),
           py::arg("include_offset") = true)
      .def(py::self == py::self);

  m.def("parse_program", &parse_program, py::arg("text"));
  m.def("print_program", &print_program);
  m.def("format_clause", &format_clause);
  m.def("cost", &cost, py::arg("program"), py::arg("x"));
  m.def(
      "enumerate_models",
      [](const Program &p) { return values_of(enumerate_models(p)); }, py::arg("program"));
  m.def("compile", &compile, py::arg("program"), py::arg("representation") = Representation::binary01);

  py::class_<RelaxResult>(m, "RelaxResult")
      .def_property_readonly("final_state", [](const RelaxResult &r) { return values_of(r.final_state); })
      .def_readonly("stable", &RelaxResult::stable)
      .def_readonly("sweeps_used", &RelaxResult::sweeps_used)
      .def_readonly("initial_energy", &RelaxResult::initial_energy)
      .def_readonly("energy_trace", &RelaxResult::energy_trace);
  m.def(
      "relax",
      [](const SynapseSet &s, const Interpretation &x0, Representation r, std::size_t max_sweeps, std::uint64_t seed) {
        return relax(s, x0, RelaxConfig{max_sweeps, seed, r});
      },
      py::arg("synapses"), py::arg("x0"), py::arg("representation") = Representation::bipolar,
      py::arg("max_sweeps") = 100, py::arg("seed") = 0);

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("models", [](const SolveResult &r) { return values_of(r.models); })
      .def_property_readonly("restarts", [](const SolveResult &r) { return r.stats.restarts; })
      .def_property_readonly("successes", [](const SolveResult &r) { return r.stats.successes; })
      .def_property_readonly("distinct_models", [](const SolveResult &r) { return r.stats.distinct_models; });
  m.def(
      "solve",
      [](const Program &p, Representation r, std::size_t restarts, std::uint64_t seed, std::size_t max_sweeps) {
        return solve(p, SolveConfig{r, restarts, seed, max_sweeps});
      },
      py::arg("program"), py::arg("representation") = Representation::bipolar, py::arg("restarts") = 64,
      py::arg("seed") = 0, py::arg("max_sweeps") = 100);

  py::class_<EventTable>(m, "EventTable")
      .def(py::init<AtomTable, std::vector<Interpretation>>(), py::arg("atoms"), py::arg("records"))
      .def_property_readonly("atoms", &EventTable::atoms)
      .def_property_readonly("records", [](const EventTable &e) { return values_of(e.records()); })
      .def("__len__", &EventTable::record_count);
  m.def("read_events", &read_events, py::arg("csv"));
  m.def("write_events", &write_events);
  m.def("model_events", [](const Program &p) { return model_events(p); }, py::arg("program"));

  py::class_<LearningRates>(m, "LearningRates")
      .def(py::init([](double a1, double a2, double a3) {
             LearningRates r{a1, a2, a3};
             r.validate();
             return r;
           }),
           py::arg("a1") = 1.0, py::arg("a2") = 1.0, py::arg("a3") = 0.5)
      .def_readonly("a1", &LearningRates::a1)
      .def_readonly("a2", &LearningRates::a2)
      .def_readonly("a3", &LearningRates::a3);
  m.def(
      "learn", [](const EventTable &ev, const LearningRates &r) { return learn(ev, r); }, py::arg("events"),
      py::arg("rates") = LearningRates{});

  m.def("read_synapses", [](const std::string &text) {
    AtomTable atoms;
    auto s = read_synapses(text, &atoms);
    return std::make_tuple(std::move(s), std::move(atoms));
  });
  m.def("write_synapses", &write_synapses, py::arg("synapses"), py::arg("atoms"));

  py::class_<MinedRule>(m, "MinedRule")
      .def_readonly("clause", &MinedRule::clause)
      .def_readonly("weight", &MinedRule::weight)
      .def_readonly("pass_", &MinedRule::pass)
      .def_readonly("ambiguous_head", &MinedRule::ambiguous_head)
      .def_readonly("support", &MinedRule::support)
      .def_readonly("confidence", &MinedRule::confidence);

  py::class_<ResidualEntry>(m, "ResidualEntry")
      .def_readonly("key", &ResidualEntry::key)
      .def_readonly("value", &ResidualEntry::value);

  py::class_<MineResult>(m, "MineResult")
      .def_readonly("rules", &MineResult::rules)
      .def_readonly("dropped", &MineResult::dropped)
      .def_property_readonly("residual", [](const MineResult &r) { return r.residual.entries; })
      .def_property_readonly("residual_l1", [](const MineResult &r) { return r.residual.l1_norm; })
      .def_readonly("synapses", &MineResult::synapses);

  m.def(
      "mine",
      [](const EventTable &ev, const LearningRates &rates, double theta, std::optional<double> min_confidence,
         bool emit_denials) {
        MineConfig cfg;
        cfg.rates = rates;
        cfg.threshold_fraction = theta;
        cfg.min_confidence = min_confidence;
        cfg.emit_denials = emit_denials;
        cfg.validate();
        return mine(ev, cfg);
      },
      py::arg("events"), py::arg("rates") = LearningRates{}, py::arg("theta") = 0.5,
      py::arg("min_confidence") = py::none(), py::arg("emit_denials") = false);
  m.def("write_rules", &write_rules, py::arg("result"), py::arg("atoms"));
  m.def(
      "rule_confidence",
      [](const Clause &c, const EventTable &ev) {
        const auto rc = rule_confidence(c, ev);
        return std::make_tuple(rc.support, rc.confidence);
      },
      py::arg("clause"), py::arg("events"));
}
