// Python bindings for the core operations: poset constructors, the Macaulay
// and additivity decisions, monomial posets of quotient rings, poset and ring
// operations, and the Hasse-diagram emitters.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "macposets/io.hpp"
#include "macposets/macaulay.hpp"
#include "macposets/monomial_poset.hpp"
#include "macposets/poset_ops.hpp"
#include "macposets/render.hpp"
#include "macposets/ring_ops.hpp"

namespace py = pybind11;
using namespace macposets;

namespace {

SearchBudget budget_from(double max_time_secs) {
  SearchBudget b;
  b.max_time = std::chrono::milliseconds(static_cast<long long>(max_time_secs * 1000.0));
  return b;
}

IdealPresentation presentation_from(const std::vector<std::string>& vars,
                                    const std::vector<std::string>& ideal,
                                    const std::string& field, uint32_t p) {
  Field f = field == "QQ" ? Field::rationals() : Field::prime(p);
  if (field != "QQ" && field != "Fp")
    fail(errc::bad_format, "field must be 'QQ' or 'Fp'");
  return make_presentation(vars, ideal, f);
}

py::dict outcome_dict(const MacaulayOutcome& out, const Poset& p) {
  py::dict d;
  d["result"] = out.decision == Decision::yes      ? "yes"
                : out.decision == Decision::no     ? "no"
                                                   : "timeout";
  if (out.witness) d["witness"] = out.witness->flat_labels(p);
  if (!out.note.empty()) d["note"] = out.note;
  return d;
}

py::list classes_list(const MonomialClassTable& table) {
  py::list out;
  for (const auto& c : table.classes()) {
    py::dict d;
    d["label"] = c.label;
    d["degree"] = c.degree;
    d["representative"] = monomial_to_string(c.representative, table.ring().vars);
    d["key"] = c.key.to_string(table.ring().vars);
    out.append(std::move(d));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs_of(
    const std::vector<std::vector<std::string>>& raw) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& pair : raw) {
    if (pair.size() != 2) fail(errc::bad_format, "each pair needs exactly two labels");
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_macposets, m) {
  m.doc() = "Macaulay posets, monomial posets of graded rings, and poset operations";

  py::register_exception<error>(m, "MacposetsError");

  py::class_<Poset>(m, "Poset")
      .def_static(
          "from_covers",
          [](const std::vector<std::string>& labels,
             const std::vector<std::vector<std::string>>& covers) {
            return Poset::from_covers(labels, pairs_of(covers));
          },
          py::arg("elements"), py::arg("covers"))
      .def("__len__", &Poset::size)
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__",
           [](const Poset& p) {
             return "<Poset with " + std::to_string(p.size()) + " elements, " +
                    std::to_string(p.covers().size()) + " covers>";
           })
      .def("elements", [](const Poset& p) { return p.labels(); })
      .def("covers",
           [](const Poset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [a, b] : p.covers()) out.emplace_back(p.label(a), p.label(b));
             return out;
           })
      .def("ranked", &Poset::ranked)
      .def("ranks",
           [](const Poset& p) {
             py::dict d;
             for (int i = 0; i < p.size(); ++i)
               d[py::str(p.label(i))] = p.ranks().rank[i];
             return d;
           })
      .def("levels",
           [](const Poset& p) {
             std::vector<std::vector<std::string>> out;
             for (const auto& lvl : p.ranks().levels) {
               out.emplace_back();
               for (int v : lvl) out.back().push_back(p.label(v));
             }
             return out;
           })
      .def("leq",
           [](const Poset& p, const std::string& a, const std::string& b) {
             return p.leq(p.index_of(a), p.index_of(b));
           })
      .def("minimal_elements",
           [](const Poset& p) {
             std::vector<std::string> out;
             for (int v : p.minimal_elements()) out.push_back(p.label(v));
             return out;
           })
      .def("maximal_elements", [](const Poset& p) {
        std::vector<std::string> out;
        for (int v : p.maximal_elements()) out.push_back(p.label(v));
        return out;
      });

  m.def("chain", &chain, py::arg("n"));
  m.def("boolean_lattice", &boolean_lattice, py::arg("n"));
  m.def("cartesian_product", &cartesian_product);
  m.def("disjoint_union", &disjoint_union);
  m.def("dual", &dual);

  m.def(
      "are_isomorphic",
      [](const Poset& p, const Poset& q) -> py::object {
        auto iso = are_isomorphic(p, q);
        if (!iso) return py::none();
        py::dict d;
        for (int i = 0; i < p.size(); ++i)
          d[py::str(p.label(i))] = q.label(iso->image[i]);
        return d;
      },
      "Witness bijection as a dict, or None");

  m.def("anti_automorphism", [](const Poset& p) -> py::object {
    auto q = anti_automorphism(p);
    if (!q) return py::none();
    py::dict d;
    for (int i = 0; i < p.size(); ++i) d[py::str(p.label(i))] = p.label(q->image[i]);
    return d;
  });

  m.def("upper_shadow",
        [](const Poset& p, const std::vector<std::string>& a) { return upper_shadow(p, a); });
  m.def("lower_shadow",
        [](const Poset& p, const std::vector<std::string>& a) { return lower_shadow(p, a); });
  m.def("min_upper_shadow", &min_upper_shadow, py::arg("poset"), py::arg("rank"),
        py::arg("size"));

  m.def(
      "verify_macaulay_order",
      [](const Poset& p, const std::vector<std::string>& order) {
        auto res = verify_macaulay_order(p, level_order_from_labels(p, order));
        py::dict d;
        d["ok"] = res.ok;
        if (res.failure) {
          d["rank"] = res.failure->rank;
          d["size"] = res.failure->size;
          d["condition"] = res.failure->condition;
        }
        return d;
      },
      py::arg("poset"), py::arg("order"));

  m.def(
      "is_macaulay",
      [](const Poset& p, double max_time) { return outcome_dict(is_macaulay(p, budget_from(max_time)), p); },
      py::arg("poset"), py::arg("max_time") = 60.0);

  m.def(
      "macaulay_orders",
      [](const Poset& p, double max_time, bool all) {
        auto out = macaulay_orders(p, budget_from(max_time), all);
        py::dict d;
        py::list orders;
        for (const auto& o : out.orders) orders.append(o.flat_labels(p));
        d["orders"] = std::move(orders);
        d["complete"] = out.complete;
        return d;
      },
      py::arg("poset"), py::arg("max_time") = 60.0, py::arg("all") = true);

  m.def(
      "new_shadow",
      [](const Poset& p, const std::vector<std::string>& order,
         const std::vector<std::string>& segment) {
        std::vector<int> ids;
        for (const auto& l : segment) ids.push_back(p.index_of(l));
        auto o = level_order_from_labels(p, order);
        std::vector<std::string> out;
        for (int v : new_shadow(p, o, std::span<const int>(ids))) out.push_back(p.label(v));
        return out;
      },
      py::arg("poset"), py::arg("order"), py::arg("segment"));

  m.def(
      "is_additive",
      [](const Poset& p, double max_time) { return outcome_dict(is_additive(p, budget_from(max_time)), p); },
      py::arg("poset"), py::arg("max_time") = 60.0);

  m.def(
      "is_macaulay_naive",
      [](const Poset& p, int max_elements) {
        return outcome_dict(is_macaulay_naive(p, max_elements), p);
      },
      py::arg("poset"), py::arg("max_elements") = 10);

  m.def(
      "get_mons",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& ideal,
         int max_degree, const std::string& field, uint32_t p) {
        auto table =
            MonomialClassTable::build(presentation_from(vars, ideal, field, p), max_degree);
        return classes_list(table);
      },
      py::arg("vars"), py::arg("ideal"), py::arg("max_degree") = 10, py::arg("field") = "QQ",
      py::arg("p") = 0);

  m.def(
      "get_poset",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& ideal,
         int max_degree, const std::string& field, uint32_t p) {
        auto table =
            MonomialClassTable::build(presentation_from(vars, ideal, field, p), max_degree);
        return py::make_tuple(poset_of(table), classes_list(table));
      },
      py::arg("vars"), py::arg("ideal"), py::arg("max_degree") = 10, py::arg("field") = "QQ",
      py::arg("p") = 0, "Returns (poset, classes)");

  m.def(
      "socle_monomial",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& ideal,
         const std::string& field, uint32_t p) {
        auto table = MonomialClassTable::build(presentation_from(vars, ideal, field, p));
        return table.classes()[socle_class(table)].label;
      },
      py::arg("vars"), py::arg("ideal"), py::arg("field") = "QQ", py::arg("p") = 0);

  py::class_<PosetMap>(m, "PosetMap")
      .def("__repr__", [](const PosetMap& m_) {
        return "<PosetMap on " + std::to_string(m_.domain.size()) + " elements>";
      });

  m.def(
      "poset_map",
      [](const Poset& domain, const Poset& codomain,
         const std::vector<std::vector<std::string>>& images) {
        return poset_map(domain, codomain, pairs_of(images));
      },
      py::arg("domain"), py::arg("codomain"), py::arg("images"));

  m.def("wedge_product", &wedge_product, py::arg("posets"));
  m.def("fiber_product", &fiber_product, py::arg("maps"));
  m.def(
      "closed_product",
      [](const std::vector<Poset>& posets) {
        auto out = closed_product(posets);
        return py::make_tuple(out.poset, out.warnings);
      },
      py::arg("posets"), "Returns (poset, warnings)");
  m.def("connected_sum", &connected_sum, py::arg("maps"));

  auto ring_result = [](const RingOpResult& out) {
    py::dict d;
    d["vars"] = out.ring.vars;
    std::vector<std::string> gens;
    for (const auto& g : out.ring.generators) gens.push_back(g.to_string(out.ring.vars));
    d["ideal"] = std::move(gens);
    d["warnings"] = out.warnings;
    return d;
  };

  m.def(
      "ring_fiber_product",
      [ring_result](const std::vector<std::string>& vars_a, const std::vector<std::string>& ideal_a,
                    const std::vector<std::string>& vars_b,
                    const std::vector<std::string>& ideal_b, const std::string& field,
                    uint32_t p) {
        return ring_result(ring_fiber_product(presentation_from(vars_a, ideal_a, field, p),
                                              presentation_from(vars_b, ideal_b, field, p)));
      },
      py::arg("vars_a"), py::arg("ideal_a"), py::arg("vars_b"), py::arg("ideal_b"),
      py::arg("field") = "QQ", py::arg("p") = 0);

  m.def(
      "ring_connected_sum",
      [ring_result](const std::vector<std::string>& vars_a, const std::vector<std::string>& ideal_a,
                    const std::vector<std::string>& vars_b,
                    const std::vector<std::string>& ideal_b, const std::string& field,
                    uint32_t p) {
        return ring_result(ring_connected_sum(presentation_from(vars_a, ideal_a, field, p),
                                              presentation_from(vars_b, ideal_b, field, p)));
      },
      py::arg("vars_a"), py::arg("ideal_a"), py::arg("vars_b"), py::arg("ideal_b"),
      py::arg("field") = "QQ", py::arg("p") = 0);

  m.def(
      "to_tikz",
      [](const Poset& p, const std::optional<std::vector<std::string>>& order) {
        if (!order) return to_tikz(p);
        return to_tikz(p, level_order_from_labels(p, *order));
      },
      py::arg("poset"), py::arg("order") = py::none());
  m.def("to_dot", &to_dot, py::arg("poset"));

  m.def("poset_to_json", [](const Poset& p) { return poset_to_json(p).dump(2); });
  m.def("poset_from_json", [](const std::string& text) {
    return poset_from_json(nlohmann::json::parse(text));
  });
}
