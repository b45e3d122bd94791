#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclicdef/catalog.hpp"
#include "cyclicdef/census.hpp"
#include "cyclicdef/constructors.hpp"
#include "cyclicdef/errors.hpp"
#include "cyclicdef/invariants.hpp"
#include "cyclicdef/isomorphism.hpp"
#include "cyclicdef/oracle.hpp"
#include "cyclicdef/spec_parser.hpp"

namespace py = pybind11;
using namespace cyclicdef;

namespace {

Group group_from_cycles(const std::vector<std::string>& generators, std::size_t degree,
                        std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  std::vector<std::vector<std::vector<std::size_t>>> parsed;
  for (const auto& g : generators) {
    parsed.push_back(parse_cycles(g));
    for (const auto& cycle : parsed.back()) {
      for (std::size_t p : cycle) degree = std::max(degree, p + 1);
    }
  }
  degree = std::max<std::size_t>(degree, 1);
  std::vector<Permutation> perms;
  for (const auto& g : generators) perms.push_back(parse_permutation(g, degree));
  return Group::closure(perms, cap);
}

py::list violations_to_list(const std::vector<Violation>& vs) {
  py::list out;
  for (const auto& v : vs) {
    py::dict d;
    d["id"] = v.id ? py::cast(std::make_pair(v.id->order, v.id->index)) : py::none();
    d["name"] = v.name;
    d["message"] = v.message;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cyclic subgroup census engine";

  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<InvalidSpec>(m, "InvalidSpec", PyExc_ValueError);
  py::register_exception<ClosureCapExceeded>(m, "ClosureCapExceeded", PyExc_RuntimeError);

  py::class_<DeltaReport>(m, "DeltaReport")
      .def_readonly("group_order", &DeltaReport::group_order)
      .def_readonly("cyclic_count", &DeltaReport::cyclic_count)
      .def_readonly("delta", &DeltaReport::delta)
      .def_readonly("i2", &DeltaReport::i2)
      .def_readonly("bound_ok", &DeltaReport::bound_ok)
      .def_readonly("equality_case", &DeltaReport::equality_case)
      .def("__eq__", [](const DeltaReport& a, const DeltaReport& b) { return a == b; })
      .def("__repr__", [](const DeltaReport& r) {
        return "DeltaReport(group_order=" + std::to_string(r.group_order) +
               ", cyclic_count=" + std::to_string(r.cyclic_count) +
               ", delta=" + std::to_string(r.delta) + ", i2=" + std::to_string(r.i2) + ")";
      });

  py::class_<Group>(m, "Group")
      .def(py::init(&group_from_cycles), py::arg("generators"), py::arg("degree") = 0,
           py::arg("cap") = kDefaultClosureCap,
           "Closure of generators in 1-based cycle notation, e.g. ['(1,2,3,4)', '(1,3)'].")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("name", &Group::name)
      .def_property_readonly("id",
                             [](const Group& g) -> py::object {
                               if (!g.id()) return py::none();
                               return py::cast(std::make_pair(g.id()->order, g.id()->index));
                             })
      .def("elements",
           [](const Group& g) {
             std::vector<std::string> out;
             for (const auto& e : g.elements()) out.push_back(to_cycle_string(e));
             return out;
           })
      .def("__len__", &Group::order)
      .def("__repr__", [](const Group& g) {
        return "<Group " + (g.name().empty() ? std::string("?") : g.name()) +
               " of order " + std::to_string(g.order()) + ">";
      });

  py::class_<Catalog>(m, "Catalog")
      .def_property_readonly("gap_indexing", [](const Catalog& c) { return c.gap_indexing; })
      .def_property_readonly("complete_orders",
                             [](const Catalog& c) { return c.complete_orders; })
      .def("__len__", [](const Catalog& c) { return c.entries.size(); })
      .def("groups",
           [](const Catalog& c) {
             std::vector<Group> out;
             for (const auto& e : c.entries) out.push_back(e.group);
             return out;
           })
      .def("find",
           [](const Catalog& c, std::uint32_t order, std::uint32_t index) -> py::object {
             const CatalogEntry* e = c.find({order, index});
             return e ? py::cast(e->group) : py::none();
           })
      .def("to_text", &write_catalog);

  m.def("build",
        [](const std::string& spec, std::size_t cap) { return build(parse_group_spec(spec), cap); },
        py::arg("spec"), py::arg("cap") = kDefaultClosureCap,
        "Build a group from a constructor expression such as 'D8', 'C2^2xD8' or 'C3:C4@-1'.");
  m.def("delta", py::overload_cast<const Group&>(&delta), "|G| - |C(G)|.");
  m.def("delta_report", py::overload_cast<const Group&>(&delta_report));
  m.def("i2", &i2, "Number of elements of order 1 or 2.");
  m.def("order_census", [](const Group& g) { return order_census(g).counts(); },
        "Element order -> number of elements of that order.");
  m.def("is_isomorphic", py::overload_cast<const Group&, const Group&>(&is_isomorphic));

  m.def("parse_catalog",
        [](const std::string& text, std::size_t cap) {
          return parse_catalog(text, ParseOptions{cap});
        },
        py::arg("text"), py::arg("cap") = kDefaultClosureCap);
  m.def("load_catalog",
        [](const std::string& path, std::size_t cap) {
          return load_catalog(path, ParseOptions{cap});
        },
        py::arg("path"), py::arg("cap") = kDefaultClosureCap);
  m.def("bundled_catalog_text", [] { return std::string(bundled_desk_catalog_text()); });
  m.def("validate_catalog", [](const Catalog& c) {
    py::list out;
    for (const auto& d : validate_catalog(c)) {
      py::dict item;
      item["kind"] = to_string(d.kind);
      item["id"] = d.id ? py::cast(std::make_pair(d.id->order, d.id->index)) : py::none();
      item["message"] = d.message;
      out.append(item);
    }
    return out;
  });

  m.def("census",
        [](const Catalog& c, std::uint64_t delta_max, const std::string& format) {
          if (format != "text" && format != "structured") {
            throw std::invalid_argument("format must be 'text' or 'structured'");
          }
          return emit_report(run_census(c, delta_max),
                             format == "text" ? ReportFormat::text : ReportFormat::structured);
        },
        py::arg("catalog"), py::arg("delta_max"), py::arg("format") = "text",
        "Census report for Delta = 1..delta_max.");
  m.def("verify", [](const Catalog& c) {
    std::uint64_t delta_max = 1;
    for (const auto& e : c.entries) delta_max = std::max<std::uint64_t>(delta_max, e.order);
    py::dict out;
    out["bound"] = violations_to_list(verify_bound(run_census(c, delta_max)));
    out["miller"] = violations_to_list(verify_miller(c));
    out["generator_count"] = violations_to_list(verify_star_identity(c));
    return out;
  });

  m.def("oracle_count", [](std::size_t n) { return oracle::enumerate_tables(n).size(); },
        "Number of groups of order n (n <= 10) by exhaustive table search.");
}
