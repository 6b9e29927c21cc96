#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zonogon/bounds.hpp"
#include "zonogon/canon.hpp"
#include "zonogon/classify.hpp"
#include "zonogon/enumerate.hpp"
#include "zonogon/svg.hpp"
#include "zonogon/tiling_json.hpp"
#include "zonogon/validate.hpp"

namespace {

namespace fs = std::filesystem;
using namespace zonogon;

void print_case_counts(const ClassSet& classes, std::ostream& out) {
  std::map<std::string, int> cases;
  for (const auto& [code, entry] : classes.by_code)
    ++cases[class_report(entry.rep).case_label];
  out << "classes by case:\n";
  for (const char* label : {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"})
    out << "  case " << label << ": " << cases[label] << "\n";
}

ClassSet run_enumeration(int k, const std::vector<int>& mult, int jobs) {
  SearchConfig cfg;
  if (!mult.empty()) {
    Multiplicities m{k, mult};
    if (!m.valid())
      throw CLI::ValidationError("--multiplicities",
                                 "need k entries in 1..2k-3");
    return enumerate_irreducible_classes(m, cfg);
  }
  return enumerate_irreducible_classes(k, cfg, jobs);
}

int cmd_count(int k, int jobs) {
  if (k == 2)
    std::cerr << "note: for k = 2 the only multiplicity vector is (1,1) and"
                 " the only edge-to-edge decomposition is the parallelogram"
                 " itself; single-tile decompositions are excluded, so the"
                 " count is 0 by definition.\n";
  ClassSet classes = run_enumeration(k, {}, jobs);
  std::cout << classes.by_code.size() << "\n";
  if (k == 4) print_case_counts(classes, std::cerr);
  return 0;
}

int cmd_enumerate(int k, const std::vector<int>& mult, const std::string& out,
                  int jobs) {
  ClassSet classes = run_enumeration(k, mult, jobs);
  fs::create_directories(out);
  std::size_t index = 0;
  for (const auto& [code, entry] : classes.by_code) {
    std::string stem = (fs::path(out) / class_file_stem(index)).string();
    save_tiling(entry.rep, stem + ".json");
    std::ofstream svg(stem + ".svg");
    svg << render_svg(entry.rep);
    ++index;
  }
  std::ofstream summary(fs::path(out) / "summary.json");
  summary << summary_json(classes).dump(2) << "\n";
  std::cout << classes.by_code.size() << " classes -> " << out << "\n";
  if (k == 4) print_case_counts(classes, std::cerr);
  return 0;
}

int cmd_classify(const std::string& dir, const std::string& json_out) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("class_", 0) == 0 && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "error: no class_*.json files in " << dir << "\n";
    return 2;
  }
  std::vector<TilingComplex> reps;
  reps.reserve(files.size());
  for (const auto& f : files) reps.push_back(load_tiling(f));

  std::map<std::string, int> cases;
  nlohmann::json jreports = nlohmann::json::array();
  std::cout << "code(prefix)      type       case  census\n";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    ClassReport r = class_report(reps[i]);
    if (!r.case_label.empty()) ++cases[r.case_label];
    std::cout << r.code.substr(0, 16) << "  " << r.type_string;
    for (std::size_t pad = r.type_string.size(); pad < 9; ++pad) std::cout << ' ';
    std::cout << "  " << (r.case_label.empty() ? "-" : r.case_label) << "     ";
    for (const auto& [sides, n] : r.census)
      std::cout << n << "x" << sides << "-gon ";
    std::cout << "\n";
    nlohmann::json jr;
    jr["file"] = files[i];
    jr["code"] = r.code;
    jr["type"] = r.type_string;
    if (!r.case_label.empty()) jr["case"] = r.case_label;
    for (const auto& [sides, n] : r.census)
      jr["census"][std::to_string(sides)] = n;
    jr["side_profiles"] = r.side_profiles;
    jreports.push_back(std::move(jr));
  }
  if (!cases.empty()) {
    std::cout << "\n";
    for (const auto& [label, n] : cases)
      std::cout << "case " << label << ": " << n << "\n";
  }

  NeighborTable table = neighbor_table(reps);
  std::cout << "\nside profiles (>= 3 edges) and neighboring side sizes:\n";
  nlohmann::json jtable = nlohmann::json::array();
  for (const auto& [hex, row] : table.rows) {
    std::cout << "  " << hex.substr(0, 16) << "  " << row.side_edges
              << " edges  neighbors:";
    for (auto [a, b] : row.neighbor_types)
      std::cout << " (" << a << "," << b << ")";
    std::cout << "\n";
    nlohmann::json jrow;
    jrow["profile"] = hex;
    jrow["side_edges"] = row.side_edges;
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [a, b] : row.neighbor_types) pairs.push_back({a, b});
    jrow["neighbor_side_sizes"] = std::move(pairs);
    jtable.push_back(std::move(jrow));
  }
  if (!json_out.empty()) {
    nlohmann::json doc;
    doc["classes"] = std::move(jreports);
    doc["side_profile_table"] = std::move(jtable);
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 2;
    }
    out << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_validate(const std::vector<std::string>& files) {
  bool all_ok = true;
  for (const auto& f : files) {
    try {
      TilingComplex c = load_tiling(f);
      ValidationReport report = validate_complex(c);
      if (report.ok()) {
        std::cout << f << ": ok (" << report.findings.size() << " checks)\n";
      } else {
        all_ok = false;
        std::cout << f << ": FAILED\n";
        for (const auto& finding : report.findings)
          if (!finding.pass)
            std::cout << "  " << finding.check << ": " << finding.detail << "\n";
      }
    } catch (const std::exception& e) {
      all_ok = false;
      std::cout << f << ": FAILED\n  " << e.what() << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_bound(int k) {
  if (k < 4)
    std::cerr << "warning: the edge bound derivation assumes k >= 4; values"
                 " for k = " << k << " are formal only.\n";
  BoundReport r = bound_report(k);
  std::cout << "k = " << r.k << "\n";
  std::cout << "exact edge bound = " << r.exact_edge_bound << "\n";
  std::cout << "N = " << r.n << "\n";
  std::cout << "t_N digits = " << r.t_n_digits << "\n";
  std::cout << "t_N leading digits = " << r.t_n.substr(0, 24)
            << (r.t_n_digits > 24 ? "..." : "") << "\n";
  std::cout << "theorem bound digits = " << r.theorem_bound_digits << "\n";
  std::cout << "theorem bound leading digits = "
            << r.theorem_bound.substr(0, 24)
            << (r.theorem_bound_digits > 24 ? "..." : "") << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.log10_asymptotic);
  std::cout << "log10 asymptotic estimate = " << buf << "\n";
  return 0;
}

int cmd_render(const std::string& file, const std::string& svg_out) {
  TilingComplex c = load_tiling(file);
  std::ofstream out(svg_out);
  if (!out) {
    std::cerr << "error: cannot write " << svg_out << "\n";
    return 2;
  }
  out << render_svg(c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact enumeration, classification, and verification of irreducible "
      "edge-to-edge decompositions of centrally symmetric 2k-gons into "
      "centrally symmetric tiles"};
  app.require_subcommand(1);

  int k = 0;
  std::vector<int> mult;
  std::string out_dir = ".";
  std::string in_dir;
  std::string json_out;
  std::string svg_out;
  std::vector<std::string> files;
  int jobs = 1;

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "Write one tiling file and one SVG per class, plus summary.json");
  c_enum->add_option("--k", k, "Half the number of boundary sides")
      ->required()
      ->check(CLI::Range(2, 16));
  c_enum->add_option("--multiplicities", mult,
                     "Fixed multiplicity vector m1,..,mK (default: all)")
      ->delimiter(',');
  c_enum->add_option("--out", out_dir, "Output directory");
  c_enum->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  CLI::App* c_count = app.add_subcommand("count", "Print the class count");
  c_count->add_option("--k", k, "Half the number of boundary sides")
      ->required()
      ->check(CLI::Range(2, 16));
  c_count->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  CLI::App* c_classify =
      app.add_subcommand("classify", "Recompute class reports from stored files");
  c_classify->add_option("--in", in_dir, "Directory with class_*.json")->required();
  c_classify->add_option("--json", json_out, "Also write the report as JSON");

  CLI::App* c_validate =
      app.add_subcommand("validate", "Check stored tilings; nonzero exit on failure");
  c_validate->add_option("files", files, "Tiling files")->required();

  CLI::App* c_bound = app.add_subcommand("bound", "Print the counting bound report");
  c_bound->add_option("--k", k, "Half the number of boundary sides")
      ->required()
      ->check(CLI::Range(2, 10000));

  CLI::App* c_render = app.add_subcommand("render", "Render a tiling file to SVG");
  c_render->add_option("file", files, "Tiling file")->required()->expected(1);
  c_render->add_option("--svg", svg_out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_count->parsed()) return cmd_count(k, jobs);
    if (c_enum->parsed()) return cmd_enumerate(k, mult, out_dir, jobs);
    if (c_classify->parsed()) return cmd_classify(in_dir, json_out);
    if (c_validate->parsed()) return cmd_validate(files);
    if (c_bound->parsed()) return cmd_bound(k);
    if (c_render->parsed()) return cmd_render(files.at(0), svg_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
