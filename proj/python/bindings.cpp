#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uqpa/fusion.hpp"
#include "uqpa/generators.hpp"
#include "uqpa/relations.hpp"
#include "uqpa/report.hpp"

namespace py = pybind11;
using namespace uqpa;

namespace {

py::int_ to_py(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

FloorConvention convention_arg(const std::string& name) {
  auto c = parse_convention(name);
  if (!c) throw py::value_error("unknown floor convention: " + name);
  return *c;
}

py::dict report_dict(const RelationReport& r) {
  py::dict d;
  d["relation_id"] = r.relation_id;
  d["p"] = r.p;
  d["strands"] = r.strands;
  d["holds"] = r.skipped ? py::object(py::none()) : py::object(py::bool_(r.holds));
  d["skipped"] = r.skipped;
  d["skip_reason"] = r.skip_reason;
  d["detail"] = r.detail;
  if (r.witness) d["witness"] = r.witness->str();
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for the restricted quantum group at q = exp(i pi / p)";
  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  m.def("relation_ids", &relation_ids);
  m.def(
      "verify",
      [](const std::string& id, int p, std::size_t budget) {
        if (!is_relation_id(id)) throw py::value_error("unknown relation id: " + id);
        py::gil_scoped_release release;
        auto r = verify(id, p, budget);
        py::gil_scoped_acquire acquire;
        return report_dict(r);
      },
      py::arg("relation_id"), py::arg("p"), py::arg("budget") = kDefaultBudget);

  m.def(
      "commutant_dim",
      [](int p, int n, std::size_t budget) {
        try {
          return commutant_dim(p, n, budget);
        } catch (const InfeasibleSize& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("p"), py::arg("n"), py::arg("budget") = kDefaultBudget);

  m.def("dimension", [](int n, int p) { return to_py(dimension(n, p)); }, py::arg("n"), py::arg("p"));
  m.def("catalan", [](int n) { return to_py(catalan(n)); }, py::arg("n"));
  m.def("decomposition", [](int n, int p) { return multiset_str(multiplicities(n, p)); },
        py::arg("n"), py::arg("p"));
  m.def("conventions", [] {
    std::vector<std::string> names;
    for (auto c : all_conventions()) names.push_back(convention_name(c));
    return names;
  });
  m.def(
      "conjecture",
      [](int n, int p, const std::string& convention) {
        return to_py(conjecture_eval(n, p, convention_arg(convention)));
      },
      py::arg("n"), py::arg("p"), py::arg("convention"));

  m.def("gamma", [](int p) { Field f(p); return gamma_constant(f).str(); }, py::arg("p"));
  m.def("qint", [](int p, long n) { Field f(p); return f.qint(n).str(); }, py::arg("p"), py::arg("n"));

  m.def(
      "report",
      [](const std::string& command, std::vector<int> ps, std::vector<std::string> relations,
         std::size_t budget, const std::string& format, int max_n, std::string convention,
         int oracle_max_n) {
        RunConfig cfg;
        auto c = parse_command(command);
        if (!c) throw py::value_error("unknown command: " + command);
        auto fmt = parse_format(format);
        if (!fmt) throw py::value_error("unknown format: " + format);
        cfg.command = *c;
        cfg.ps = std::move(ps);
        cfg.relations = std::move(relations);
        cfg.budget = budget;
        cfg.format = *fmt;
        cfg.max_n = max_n;
        if (!convention.empty()) cfg.convention = convention_arg(convention);
        cfg.oracle_max_n = oracle_max_n;
        RunResult r;
        {
          py::gil_scoped_release release;
          r = build_report(cfg);
        }
        return py::make_tuple(r.exit_code, r.text);
      },
      py::arg("command"), py::arg("ps") = std::vector<int>{2, 3},
      py::arg("relations") = std::vector<std::string>{}, py::arg("budget") = kDefaultBudget,
      py::arg("format") = "json", py::arg("max_n") = -1, py::arg("convention") = "",
      py::arg("oracle_max_n") = 6);
}
