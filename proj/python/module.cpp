#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "webvac/io.hpp"
#include "webvac/render.hpp"
#include "webvac/verify.hpp"

namespace py = pybind11;
using namespace webvac;

namespace {

StandardTableau as_tab(const Grid& g) { return StandardTableau::validate(g); }

using PyArc = std::tuple<int, int, int>;  // (color, start, end)

std::vector<PyArc> arcs_of(const MulticoloredNcm& m) {
  std::vector<PyArc> out;
  for (int x = 1; x <= m.layer_count(); ++x)
    for (const Arc& a : m.layer(x)) out.emplace_back(x, a.start, a.end);
  return out;
}

MulticoloredNcm ncm_of(int n, int total, const std::vector<PyArc>& arcs) {
  std::vector<std::vector<Arc>> layers(n - 1);
  for (const auto& [color, start, end] : arcs) {
    if (color < 1 || color > n - 1) throw Error("arc color out of range");
    layers[color - 1].push_back({start, end});
  }
  return MulticoloredNcm::create(n, total, std::move(layers));
}

RenderSpec spec_for(const std::string& format) {
  RenderSpec spec;
  if (format == "svg")
    spec.format = RenderSpec::Format::Svg;
  else if (format == "tikz")
    spec.format = RenderSpec::Format::Tikz;
  else
    throw UnsupportedKind("format must be 'svg' or 'tikz'");
  return spec;
}

}  // namespace

PYBIND11_MODULE(_webvac, m) {
  m.doc() = "rectangular tableau dynamics, multicolored noncrossing matchings "
            "and sl_n web graphs";

  py::register_exception<Error>(m, "WebvacError", PyExc_ValueError);

  m.def("validate", [](const Grid& g) { return as_tab(g).grid(); },
        py::arg("grid"), "validate a standard tableau and return its grid");
  m.def("evacuate", [](const Grid& g) { return evacuate(as_tab(g)).grid(); },
        py::arg("grid"));
  m.def("promote",
        [](const Grid& g, int steps) {
          if (steps < 0) throw Error("steps must be nonnegative");
          StandardTableau t = as_tab(g);
          for (int i = 0; i < steps; ++i) t = promote(t);
          return t.grid();
        },
        py::arg("grid"), py::arg("steps") = 1);
  m.def("rotate180", [](const Grid& g) { return rotate180(as_tab(g)); },
        py::arg("grid"));
  m.def("complement", &complement, py::arg("grid"), py::arg("total"));
  m.def("evacuate_fast", [](const Grid& g) { return evacuate_fast(as_tab(g)).grid(); },
        py::arg("grid"));
  m.def("count_syt", [](int rows, int cols) { return count_syt({rows, cols}); },
        py::arg("rows"), py::arg("cols"));
  m.def("enumerate_syt",
        [](int rows, int cols, std::uint64_t budget) {
          std::vector<Grid> out;
          for (const StandardTableau& t : enumerate_syt({rows, cols}, budget))
            out.push_back(t.grid());
          return out;
        },
        py::arg("rows"), py::arg("cols"), py::arg("budget") = kDefaultEnumerationBudget);

  m.def("ncm_arcs", [](const Grid& g) { return arcs_of(ncm_from_tableau(as_tab(g))); },
        py::arg("grid"), "arcs of the tableau's matching as (color, start, end)");
  m.def("reflect_ncm",
        [](int n, int total, const std::vector<PyArc>& arcs) {
          return arcs_of(reflect_ncm(ncm_of(n, total, arcs)));
        },
        py::arg("n"), py::arg("total"), py::arg("arcs"));
  m.def("is_standard_rectangular",
        [](int n, int total, const std::vector<PyArc>& arcs) {
          return is_standard_rectangular(ncm_of(n, total, arcs)).ok;
        },
        py::arg("n"), py::arg("total"), py::arg("arcs"));
  m.def("tableau_from_ncm",
        [](int n, int total, const std::vector<PyArc>& arcs) {
          return tableau_from_ncm(ncm_of(n, total, arcs)).grid();
        },
        py::arg("n"), py::arg("total"), py::arg("arcs"));

  m.def("ncm_text", [](const Grid& g) { return print_ncm(ncm_from_tableau(as_tab(g))); },
        py::arg("grid"));
  m.def("web_text",
        [](const Grid& g, bool raw) {
          WebGraph w = web_from_ncm(ncm_from_tableau(as_tab(g)));
          if (!raw) w = standardize_boundary(w);
          return print_web(w);
        },
        py::arg("grid"), py::arg("raw") = false);
  m.def("reflect_web_text",
        [](const std::string& text) { return print_web(reflect_web(parse_web(text))); },
        py::arg("text"));
  m.def("flip_web_text",
        [](const std::string& text, const std::vector<int>& printed_ids) {
          WebGraph w = parse_web(text);
          std::vector<int> order = web_edge_print_order(w);
          std::vector<int> indices;
          for (int id : printed_ids) {
            if (id < 1 || id > static_cast<int>(order.size()))
              throw UnknownEdge("edge id out of range");
            indices.push_back(order[id - 1]);
          }
          return print_web(flip_edges(w, indices));
        },
        py::arg("text"), py::arg("printed_ids"));
  m.def("webs_equal",
        [](const std::string& a, const std::string& b, bool exact) {
          return web_equal_anchored(parse_web(a), parse_web(b),
                                    exact ? WebEqualMode::Exact
                                          : WebEqualMode::UndirectedUnweighted)
              .ok;
        },
        py::arg("a"), py::arg("b"), py::arg("exact") = true);

  m.def("render_ncm",
        [](const std::string& text, const std::string& format) {
          return render_ncm(parse_ncm(text), spec_for(format));
        },
        py::arg("text"), py::arg("format") = "svg");
  m.def("render_web",
        [](const std::string& text, const std::string& format) {
          return render_web(parse_web(text), spec_for(format));
        },
        py::arg("text"), py::arg("format") = "svg");

  m.def("verify_shape",
        [](int rows, int cols, std::uint64_t budget) {
          auto reports = run_suite({{rows, cols}}, budget);
          return py::make_tuple(all_passed(reports), print_reports(reports));
        },
        py::arg("rows"), py::arg("cols"),
        py::arg("budget") = kDefaultEnumerationBudget,
        "run the full check battery; returns (all_passed, report_text)");
}
