#include "sytpoly/poly.hpp"
#include "sytpoly/polytope.hpp"
#include "sytpoly/tableaux.hpp"
#include "sytpoly/trees.hpp"
#include "sytpoly/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

namespace py = pybind11;
using namespace sytpoly;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ big_to_py(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(to_decimal(v));
}

Partition make_partition(const std::vector<int>& parts, int n) {
    return Partition(parts, n);
}

py::list tableau_rows(const ShiftedTableau& t) {
    py::list rows;
    for (int r = 1; r <= t.diagram().n(); ++r) {
        py::list row;
        for (int c = r; c <= t.diagram().row_end(r); ++c) row.append(t.at(r, c));
        rows.append(row);
    }
    return rows;
}

py::object poly_terms(const RationalPolynomial& p) {
    return json_to_py(poly_to_json(p));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "shifted Young tableaux, diagonal vectors, and Minkowski-sum "
              "polytope lattice points/vertices (exact arithmetic core)";

    m.def("parse_partition",
          [](const std::string& text, int n) {
              return Partition::parse(text, n).parts();
          },
          py::arg("text"), py::arg("n"));

    m.def("diagram_size",
          [](int n, const std::vector<int>& lambda) {
              return diagram_size(build_diagram(n, make_partition(lambda, n)));
          },
          py::arg("n"), py::arg("lambda"));

    m.def("diagram_boxes",
          [](int n, const std::vector<int>& lambda) {
              const ShiftedDiagram d = build_diagram(n, make_partition(lambda, n));
              py::list out;
              for (const Box& b : d.boxes())
                  out.append(py::make_tuple(b.row, b.col));
              return out;
          },
          py::arg("n"), py::arg("lambda"));

    m.def("positive_part_count",
          [](const std::vector<int>& lambda) {
              return make_partition(lambda, std::max<int>(1, lambda.size()))
                  .positive_part_count();
          },
          py::arg("lambda"));

    m.def("tableaux",
          [](int n, const std::vector<int>& lambda, py::object limit) {
              const auto all =
                  enumerate_tableaux(build_diagram(n, make_partition(lambda, n)));
              size_t count = all.size();
              if (!limit.is_none())
                  count = std::min(count, limit.cast<size_t>());
              py::list out;
              for (size_t i = 0; i < count; ++i) {
                  py::dict d;
                  d["rows"] = tableau_rows(all[i]);
                  d["diag"] = diagonal_vector(all[i]);
                  d["gaps"] = gap_vector(all[i]);
                  out.append(d);
              }
              return out;
          },
          py::arg("n"), py::arg("lambda"), py::arg("limit") = py::none());

    m.def("count_by_gaps",
          [](int n, const std::vector<int>& lambda) {
              py::dict out;
              for (const auto& [a, c] :
                   count_by_gaps(build_diagram(n, make_partition(lambda, n))))
                  out[py::tuple(py::cast(a))] = big_to_py(c);
              return out;
          },
          py::arg("n"), py::arg("lambda"));

    m.def("diag_from_gaps",
          [](const std::vector<int>& gaps) { return diag_from_gaps(gaps); },
          py::arg("gaps"));

    m.def("lattice_points",
          [](int n, const std::vector<int>& lambda) {
              const auto pts =
                  lattice_points(p_lambda(n, make_partition(lambda, n)));
              return std::vector<LatticePoint>(pts.begin(), pts.end());
          },
          py::arg("n"), py::arg("lambda"));

    m.def("coordinate_sum",
          [](int n, const std::vector<int>& lambda) {
              return coordinate_sum(p_lambda(n, make_partition(lambda, n)));
          },
          py::arg("n"), py::arg("lambda"));

    m.def("maximize",
          [](int n, const std::vector<int>& lambda, const std::vector<long>& w) {
              std::vector<Rational> wr(w.begin(), w.end());
              return maximize(p_lambda(n, make_partition(lambda, n)), wr);
          },
          py::arg("n"), py::arg("lambda"), py::arg("w"),
          "greedy maximizer for an integer functional; throws on ties");

    m.def("vertices",
          [](int n, const std::vector<int>& lambda, bool with_tableaux) {
              const Partition l = make_partition(lambda, n);
              const int k = l.positive_part_count();
              py::list out;
              for (const auto& v : enumerate_vertices(n, l)) {
                  py::dict d;
                  d["tree"] = encode_tree(v.tree);
                  d["vertex"] = v.coords;
                  d["diag"] = diag_from_gaps(v.coords);
                  if (with_tableaux) {
                      if (k >= 1 && is_bk_forest(v.tree, k))
                          d["tableau"] =
                              tableau_rows(construct_vertex_tableau(v.tree, l));
                      else
                          d["tableau"] = py::none();
                  }
                  out.append(d);
              }
              return out;
          },
          py::arg("n"), py::arg("lambda"), py::arg("with_tableaux") = false);

    m.def("trees",
          [](int n) {
              py::list out;
              for (const auto& t : enumerate_trees(n)) out.append(encode_tree(t));
              return out;
          },
          py::arg("n"));

    m.def("catalan", [](int n) { return big_to_py(catalan(n)); }, py::arg("n"));

    m.def("vertex_count_closed_form",
          [](int n, int k) { return big_to_py(vertex_count_closed_form(n, k)); },
          py::arg("n"), py::arg("k"));

    m.def("lhs_polynomial",
          [](int n, const std::vector<int>& lambda) {
              const auto table =
                  count_by_gaps(build_diagram(n, make_partition(lambda, n)));
              return poly_terms(lhs_polynomial(table, n));
          },
          py::arg("n"), py::arg("lambda"));

    m.def("rhs_polynomial",
          [](int n, const std::vector<int>& lambda) {
              return poly_terms(rhs_polynomial(make_partition(lambda, n), n));
          },
          py::arg("n"), py::arg("lambda"));

    m.def("verify_identity",
          [](int n, const std::vector<int>& lambda) {
              return json_to_py(
                  verify_identity_case(n, make_partition(lambda, n)).to_json());
          },
          py::arg("n"), py::arg("lambda"));

    m.def("verify_bijection",
          [](int n, const std::vector<int>& lambda) {
              return json_to_py(
                  verify_bijection_case(n, make_partition(lambda, n)).to_json());
          },
          py::arg("n"), py::arg("lambda"));

    m.def("verify_all",
          [](int max_n, int max_part, std::uint64_t seed) {
              py::list out;
              for (const auto& r : verify_all(max_n, max_part, seed))
                  out.append(json_to_py(r.to_json()));
              return out;
          },
          py::arg("max_n") = 3, py::arg("max_part") = 2, py::arg("seed") = 1729);
}
