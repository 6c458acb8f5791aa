#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbrp/experiment.hpp"
#include "pbrp/io.hpp"
#include "pbrp/oracle.hpp"
#include "pbrp/solvers.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// pbrp::Rational <-> fractions.Fraction (ints accepted on the way in; floats
// rejected so nothing silently loses exactness)
template <>
struct type_caster<pbrp::Rational> {
 public:
  PYBIND11_TYPE_CASTER(pbrp::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    if (PyLong_Check(src.ptr())) {
      value = pbrp::parse_rational(py::str(src).cast<std::string>());
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      const std::string num = py::str(src.attr("numerator")).cast<std::string>();
      const std::string den = py::str(src.attr("denominator")).cast<std::string>();
      value = pbrp::parse_rational(num + "/" + den);
      return true;
    }
    return false;
  }

  static handle cast(const pbrp::Rational& src, return_value_policy, handle) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(pbrp::format_rational(src)).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace pbrp;

Valuation valuation_from_object(const py::object& obj) {
  return obj.cast<Valuation>();
}

SolveReport solve_named(const Instance& inst, const std::string& algorithm,
                        const Rational& eps) {
  if (algorithm == "greedy") return greedy_uwowp(inst);
  if (algorithm == "uwo-fptas") return uwo_additive_fptas(inst, eps);
  if (algorithm == "symmetric") return symmetric_uwowp(inst);
  if (algorithm == "laminar-fptas") return uwowp_laminar_fptas(inst, eps);
  if (algorithm == "identical-costs") return uwo_identical_costs(inst);
  throw Error(ErrorCode::SchemaError, "unknown algorithm '" + algorithm + "'");
}

}  // namespace

PYBIND11_MODULE(_pbrp, m) {
  m.doc() = "Exact-rational solvers for budget-pooled participatory project funding";

  py::register_exception<Error>(m, "SolverError");

  py::class_<AdditiveValuation>(m, "AdditiveValuation")
      .def(py::init([](std::vector<Rational> values) {
             return AdditiveValuation{std::move(values)};
           }),
           py::arg("values"))
      .def_readonly("values", &AdditiveValuation::values);

  py::class_<SingleMindedValuation>(m, "SingleMindedValuation")
      .def(py::init([](ProjectSet demand, Rational value) {
             return SingleMindedValuation{canonical_set(std::move(demand)), std::move(value)};
           }),
           py::arg("demand"), py::arg("value"))
      .def_readonly("demand", &SingleMindedValuation::demand)
      .def_readonly("value", &SingleMindedValuation::value);

  py::class_<SymmetricValuation>(m, "SymmetricValuation")
      .def(py::init([](std::vector<Rational> by_count) {
             return SymmetricValuation{std::move(by_count)};
           }),
           py::arg("by_count"))
      .def_readonly("by_count", &SymmetricValuation::by_count);

  py::class_<TableValuation>(m, "TableValuation")
      .def(py::init([](std::vector<Rational> entries) {
             return TableValuation{std::move(entries)};
           }),
           py::arg("entries"))
      .def_readonly("entries", &TableValuation::entries);

  py::class_<Project>(m, "Project")
      .def(py::init([](std::string name, Rational cost) {
             return Project{std::move(name), std::move(cost)};
           }),
           py::arg("name"), py::arg("cost"))
      .def_readonly("name", &Project::name)
      .def_readonly("cost", &Project::cost);

  py::class_<Agent>(m, "Agent")
      .def(py::init([](Rational budget, py::object valuation) {
             return Agent{std::move(budget), valuation_from_object(valuation)};
           }),
           py::arg("budget"), py::arg("valuation"))
      .def_readonly("budget", &Agent::budget)
      .def_property_readonly("valuation", [](const Agent& a) -> py::object {
        return std::visit([](const auto& v) { return py::cast(v); }, a.valuation);
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](std::vector<Project> projects, std::vector<Agent> agents) {
             return Instance{std::move(projects), std::move(agents)};
           }),
           py::arg("projects"), py::arg("agents"))
      .def_readonly("projects", &Instance::projects)
      .def_readonly("agents", &Instance::agents)
      .def_property_readonly("m", &Instance::project_count)
      .def_property_readonly("n", &Instance::agent_count)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& inst) {
        return "<Instance projects=" + std::to_string(inst.project_count()) +
               " agents=" + std::to_string(inst.agent_count()) + ">";
      });

  py::class_<Outcome>(m, "Outcome")
      .def_readonly("funded", &Outcome::funded)
      .def_readonly("payments", &Outcome::payments);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("outcome", &SolveReport::outcome)
      .def_readonly("welfare", &SolveReport::welfare)
      .def_readonly("excess", &SolveReport::excess)
      .def_readonly("algorithm", &SolveReport::algorithm)
      .def_property_readonly("epsilon", [](const SolveReport& r) -> py::object {
        return r.epsilon ? py::cast(*r.epsilon) : py::none();
      })
      .def_property_readonly("funded", [](const SolveReport& r) { return r.outcome.funded; })
      .def_property_readonly("payments",
                             [](const SolveReport& r) { return r.outcome.payments; });

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("best", &OracleResult::best)
      .def_readonly("objective", &OracleResult::objective)
      .def_readonly("tie_count", &OracleResult::tie_count);

  py::class_<MaxPeResult>(m, "MaxPeResult")
      .def_readonly("projects", &MaxPeResult::projects)
      .def_readonly("excess", &MaxPeResult::excess);

  m.def("validate_instance",
        [](const Instance& inst, bool drop_uncoverable) {
          const ValidationResult r = validate_instance(inst, drop_uncoverable);
          return py::make_tuple(r.instance, r.warnings);
        },
        py::arg("instance"), py::arg("drop_uncoverable") = true);

  m.def("eval_valuation",
        [](const py::object& valuation, ProjectSet w) {
          return eval_valuation(valuation_from_object(valuation),
                                canonical_set(std::move(w)));
        },
        py::arg("valuation"), py::arg("bundle"));
  m.def("social_welfare",
        [](const Instance& inst, ProjectSet w) {
          return social_welfare(inst, canonical_set(std::move(w)));
        },
        py::arg("instance"), py::arg("bundle"));
  m.def("payment_excess",
        [](const Instance& inst, ProjectSet w) {
          return payment_excess(inst, canonical_set(std::move(w)));
        },
        py::arg("instance"), py::arg("bundle"));
  m.def("wp_payments",
        [](const Instance& inst, ProjectSet w) {
          return wp_payments(inst, canonical_set(std::move(w)));
        },
        py::arg("instance"), py::arg("bundle"));
  m.def("agent_utility", &agent_utility, py::arg("instance"), py::arg("outcome"),
        py::arg("agent"));

  m.def("brute_uwo", &brute_uwo, py::arg("instance"));
  m.def("brute_uwo_wp", &brute_uwo_wp, py::arg("instance"));
  m.def("brute_maxpe", &brute_maxpe, py::arg("instance"));

  m.def("greedy_uwowp", &greedy_uwowp, py::arg("instance"));
  m.def("uwo_additive_fptas", &uwo_additive_fptas, py::arg("instance"), py::arg("epsilon"));
  m.def("uwo_identical_costs", &uwo_identical_costs, py::arg("instance"));
  m.def("symmetric_uwowp", &symmetric_uwowp, py::arg("instance"));
  m.def("uwowp_laminar_fptas", &uwowp_laminar_fptas, py::arg("instance"), py::arg("epsilon"));
  m.def("maxpe_single_minded", &maxpe_single_minded, py::arg("instance"));
  m.def("solve", &solve_named, py::arg("instance"), py::arg("algorithm"),
        py::arg("epsilon") = Rational(1, 10));

  m.def("load_instance", &load_instance, py::arg("text"));
  m.def("save_instance", &save_instance, py::arg("instance"));

  m.def("parse_pabulib_text",
        [](const std::string& text) { return pabulib_to_instance(parse_pabulib(text)); },
        py::arg("text"),
        "Parse .pb election text and convert it to an Instance");

  m.def("gen_synthetic",
        [](const std::string& family, int n, int m_, std::uint64_t seed) {
          return gen_synthetic({parse_family(family), n, m_, seed});
        },
        py::arg("family"), py::arg("n"), py::arg("m"), py::arg("seed"));
}
