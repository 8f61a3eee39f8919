#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latagg/aggregation.hpp"
#include "latagg/catalog.hpp"
#include "latagg/io.hpp"
#include "latagg/properties.hpp"

namespace py = pybind11;
using namespace latagg;

namespace {

std::vector<std::pair<std::string, std::string>> named_pairs(const Lattice& L,
                                                             const Relation& rel) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [x, y] : rel.upper_pairs()) out.emplace_back(L.name(x), L.name(y));
  return out;
}

std::vector<std::string> named_values(const Lattice& L, const FunctionTable& t) {
  std::vector<std::string> out;
  out.reserve(t.values.size());
  for (Elem v : t.values) out.push_back(L.name(v));
  return out;
}

FunctionTable table_from_names(const Lattice& L, int arity,
                               const std::vector<std::string>& values) {
  FunctionTable t;
  t.arity = arity;
  t.domain = L.size();
  t.values.reserve(values.size());
  for (const auto& v : values) t.values.push_back(L.index_of(v));
  return t;
}

py::dict profile_dict(const PropertyProfile& p) {
  py::dict d;
  d["simple"] = p.simple;
  d["modular"] = p.modular;
  d["complemented"] = p.complemented;
  d["relatively_complemented"] = p.relatively_complemented;
  d["atoms_join_is_top"] = p.atoms_join_is_top;
  d["coatoms_meet_is_bottom"] = p.coatoms_meet_is_bottom;
  d["tolerance_trivial"] = p.tolerance_trivial;
  d["smallest_agg"] = p.smallest_agg;
  return d;
}

}  // namespace

PYBIND11_MODULE(_latagg, m) {
  m.doc() = "finite bounded lattices, their tolerances, polynomials and "
            "aggregation functions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceededError", PyExc_RuntimeError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistencyError",
                                                PyExc_RuntimeError);

  py::class_<Lattice>(m, "Lattice")
      .def_static(
          "from_covers",
          [](std::vector<std::string> names,
             std::vector<std::pair<int, int>> covers) {
            std::vector<CoverPair> cs(covers.begin(), covers.end());
            return Lattice::from_covers(std::move(names), std::move(cs));
          },
          py::arg("names"), py::arg("covers"))
      .def_static("parse", [](const std::string& text) { return parse_lat(text); },
                  py::arg("lat_text"))
      .def_property_readonly("names", &Lattice::names)
      .def_property_readonly("bottom", [](const Lattice& L) { return L.name(L.bottom()); })
      .def_property_readonly("top", [](const Lattice& L) { return L.name(L.top()); })
      .def("__len__", &Lattice::size)
      .def("leq", [](const Lattice& L, const std::string& x, const std::string& y) {
        return L.leq(L.index_of(x), L.index_of(y));
      })
      .def("join", [](const Lattice& L, const std::string& x, const std::string& y) {
        return L.name(L.join(L.index_of(x), L.index_of(y)));
      })
      .def("meet", [](const Lattice& L, const std::string& x, const std::string& y) {
        return L.name(L.meet(L.index_of(x), L.index_of(y)));
      })
      .def("atoms", [](const Lattice& L) {
        std::vector<std::string> out;
        for (Elem a : L.atoms()) out.push_back(L.name(a));
        return out;
      })
      .def("coatoms", [](const Lattice& L) {
        std::vector<std::string> out;
        for (Elem a : L.coatoms()) out.push_back(L.name(a));
        return out;
      })
      .def("join_irreducibles", [](const Lattice& L) {
        std::vector<std::string> out;
        for (Elem a : L.join_irreducibles()) out.push_back(L.name(a));
        return out;
      })
      .def("to_lat_text", [](const Lattice& L) { return to_lat_text(L); })
      .def("to_dot", [](const Lattice& L) { return to_dot(L); })
      .def("canonical_hash", [](const Lattice& L) { return canonical_hash_hex(L); })
      .def("__repr__", [](const Lattice& L) {
        return "<Lattice of " + std::to_string(L.size()) + " elements>";
      });

  py::class_<DecisionReport>(m, "DecisionReport")
      .def_property_readonly("smallest",
                             [](const DecisionReport& r) { return r.smallest; })
      .def("__repr__", [](const DecisionReport& r) {
        return std::string("<DecisionReport ") + (r.smallest ? "SMALLEST" : "NOT-SMALLEST") +
               ">";
      });

  m.def("builtin", &builtin, py::arg("name"),
        "chain-<k>, mn-<k>, bool-<k> or glued-m3");

  m.def(
      "decide",
      [](const Lattice& L) {
        DecisionReport r = decide_smallest_agg(L);
        py::dict d;
        d["smallest"] = r.smallest;
        py::dict chi_terms;
        for (const auto& [a, term] : r.chi_witnesses)
          chi_terms[py::str(L.name(a))] = term.str(L);
        d["chi"] = chi_terms;
        d["witness"] = r.tolerance_witness ? py::cast(named_pairs(L, *r.tolerance_witness))
                                           : py::none().cast<py::object>();
        return d;
      },
      py::arg("lattice"),
      "Decide smallest-class membership; returns smallest flag, chi witness "
      "terms, and a nontrivial tolerance witness otherwise.");

  m.def(
      "synthesize_chi",
      [](const Lattice& L, const std::string& element) -> std::optional<std::string> {
        auto term = synthesize_chi_polynomial(L, L.index_of(element));
        if (!term) return std::nullopt;
        return term->str(L);
      },
      py::arg("lattice"), py::arg("element"));

  m.def(
      "chi_table",
      [](const Lattice& L, const std::string& element) {
        return named_values(L, chi(L, L.index_of(element)).table);
      },
      py::arg("lattice"), py::arg("element"));

  m.def(
      "evaluate",
      [](const Lattice& L, const std::string& term_text,
         const std::vector<std::string>& args) {
        Term t = Term::parse(L, term_text, static_cast<int>(args.size()));
        std::vector<Elem> xs;
        for (const auto& a : args) xs.push_back(L.index_of(a));
        return L.name(t.evaluate(L, xs));
      },
      py::arg("lattice"), py::arg("term"), py::arg("args"));

  m.def(
      "represent",
      [](const Lattice& L, int arity, const std::vector<std::string>& values) {
        AggTable f = make_aggregation(L, table_from_names(L, arity, values));
        DecisionReport r = decide_smallest_agg(L);
        return represent_aggregation(L, f, r).str(L);
      },
      py::arg("lattice"), py::arg("arity"), py::arg("values"),
      "Polynomial term equal to the given aggregation table (values listed "
      "in lexicographic element-index order).");

  m.def(
      "is_aggregation_polynomial",
      [](const Lattice& L, int arity, const std::vector<std::string>& values) {
        return is_aggregation_polynomial(
            L, make_aggregation(L, table_from_names(L, arity, values)));
      },
      py::arg("lattice"), py::arg("arity"), py::arg("values"));

  m.def(
      "tolerances",
      [](const Lattice& L, int max_elements) {
        std::vector<std::vector<std::pair<std::string, std::string>>> out;
        for (const Tolerance& t : all_tolerances(L, max_elements))
          out.push_back(named_pairs(L, t));
        return out;
      },
      py::arg("lattice"), py::arg("max_elements") = kToleranceEnumMaxElements,
      "Every tolerance as its list of off-diagonal pairs.");

  m.def(
      "random_aggregation",
      [](const Lattice& L, int arity, uint64_t seed) {
        return named_values(L, random_aggregation(L, arity, seed).table);
      },
      py::arg("lattice"), py::arg("arity"), py::arg("seed"));

  m.def(
      "enumerate_unary_aggregations",
      [](const Lattice& L) {
        std::vector<std::vector<std::string>> out;
        for (const AggTable& t : enumerate_unary_aggregations(L))
          out.push_back(named_values(L, t.table));
        return out;
      },
      py::arg("lattice"));

  m.def("profile", [](const Lattice& L) { return profile_dict(profile(L)); },
        py::arg("lattice"));

  m.def("enumerate_lattices", &enumerate_lattices, py::arg("n"),
        py::arg("allow_eight") = false,
        "One representative per isomorphism class of bounded lattices.");

  m.def(
      "census_lines",
      [](int n, bool allow_eight) {
        std::vector<std::string> out;
        int i = 0;
        for (const CatalogEntry& e : census(n, allow_eight))
          out.push_back(census_line(i++, e));
        return out;
      },
      py::arg("n"), py::arg("allow_eight") = false);
}
