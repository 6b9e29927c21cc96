#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "zonogon/bounds.hpp"
#include "zonogon/canon.hpp"
#include "zonogon/classify.hpp"
#include "zonogon/enumerate.hpp"
#include "zonogon/svg.hpp"
#include "zonogon/tiling_json.hpp"
#include "zonogon/validate.hpp"

namespace py = pybind11;
using namespace zonogon;

namespace {

ClassSet classes_of(int k, int jobs) {
  SearchConfig cfg;
  return enumerate_irreducible_classes(k, cfg, jobs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact enumeration and verification of irreducible edge-to-edge "
      "decompositions of centrally symmetric 2k-gons";

  m.def(
      "count_classes",
      [](int k, int jobs) {
        return static_cast<std::size_t>(classes_of(k, jobs).by_code.size());
      },
      py::arg("k"), py::arg("jobs") = 1,
      "Number of combinatorial classes of irreducible decompositions");

  m.def(
      "canonical_codes",
      [](int k, int jobs) {
        std::vector<std::string> codes;
        for (const auto& [code, entry] : classes_of(k, jobs).by_code)
          codes.push_back(code);
        return codes;
      },
      py::arg("k"), py::arg("jobs") = 1,
      "Canonical codes of all classes, in code byte order");

  m.def(
      "case_counts",
      [](int jobs) {
        std::map<std::string, int> cases;
        for (const auto& [code, entry] : classes_of(4, jobs).by_code)
          ++cases[class_report(entry.rep).case_label];
        return cases;
      },
      py::arg("jobs") = 1, "Class counts per case label I..IX for k = 4");

  m.def(
      "write_classes",
      [](int k, const std::string& out_dir, int jobs) {
        ClassSet classes = classes_of(k, jobs);
        std::size_t index = 0;
        for (const auto& [code, entry] : classes.by_code) {
          std::string stem = out_dir + "/" + class_file_stem(index);
          save_tiling(entry.rep, stem + ".json");
          ++index;
        }
        return index;
      },
      py::arg("k"), py::arg("out_dir"), py::arg("jobs") = 1,
      "Write one tiling JSON file per class; returns the class count");

  m.def(
      "bound_report",
      [](int k) {
        BoundReport r = bound_report(k);
        py::dict d;
        d["k"] = r.k;
        d["n"] = r.n;
        d["exact_edge_bound"] = r.exact_edge_bound;
        d["t_n"] = r.t_n;
        d["theorem_bound"] = r.theorem_bound;
        d["log10_asymptotic"] = r.log10_asymptotic;
        return d;
      },
      py::arg("k"), "Certified counting bound ingredients as a dict");

  m.def("loopless_map_count", &loopless_map_count, py::arg("n"),
        "Exact loopless rooted map count, as a decimal string");

  m.def("asymptotic_estimate", &asymptotic_estimate, py::arg("n"),
        "log10 of the asymptotic estimate at n");

  m.def(
      "validate_file",
      [](const std::string& path) {
        TilingComplex c = load_tiling(path);
        ValidationReport report = validate_complex(c);
        std::vector<std::map<std::string, std::string>> findings;
        for (const auto& f : report.findings)
          findings.push_back({{"check", f.check},
                              {"pass", f.pass ? "true" : "false"},
                              {"detail", f.detail}});
        return py::make_tuple(report.ok(), findings);
      },
      py::arg("path"), "(ok, findings) for a stored tiling file");

  m.def(
      "canonical_code_of_file",
      [](const std::string& path) {
        return code_hex(canonical_code(load_tiling(path)));
      },
      py::arg("path"), "Canonical code of a stored tiling file");

  m.def(
      "render_file",
      [](const std::string& path) { return render_svg(load_tiling(path)); },
      py::arg("path"), "SVG document for a stored tiling file");
}
