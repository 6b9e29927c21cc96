#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const char* env = std::getenv("ZONOGON_CLI");
  std::string bin = env ? env : "./zonogon";
  std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
  std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
  ++counter;
  std::string cmd = bin + " " + args + " >" + out_path + " 2>" + err_path;
  int rc = std::system(cmd.c_str());
  CliResult r;
  if (rc != -1 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("count subcommand") {
  CliResult r = run_cli("count --k 3");
  CHECK(r.status == 0);
  CHECK(r.out == "6\n");

  CliResult r2 = run_cli("count --k 2");
  CHECK(r2.status == 0);
  CHECK(r2.out == "0\n");
  CHECK(r2.err.find("definition") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("count").status == 2);
  CHECK(run_cli("frobnicate --k 3").status == 2);
  CHECK(run_cli("count --k 1").status == 2);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("bound subcommand") {
  CliResult r = run_cli("bound --k 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("N = 553") != std::string::npos);
  CHECK(r.out.find("exact edge bound = 341.42135623730950488") !=
        std::string::npos);
  CHECK(r.out.find("theorem bound digits") != std::string::npos);
  CHECK(r.out.find("log10 asymptotic estimate") != std::string::npos);
  CHECK(r.err.empty());

  CliResult r2 = run_cli("bound --k 3");
  CHECK(r2.status == 0);
  CHECK(r2.err.find("warning") != std::string::npos);
}

TEST_CASE("enumerate, validate, classify, render pipeline") {
  fs::remove_all("cli_enum_out");
  CliResult r = run_cli("enumerate --k 3 --out cli_enum_out");
  CHECK(r.status == 0);
  int jsons = 0, svgs = 0;
  for (const auto& entry : fs::directory_iterator("cli_enum_out")) {
    std::string name = entry.path().filename().string();
    if (name.rfind("class_", 0) == 0 && entry.path().extension() == ".json")
      ++jsons;
    if (entry.path().extension() == ".svg") ++svgs;
  }
  CHECK(jsons == 6);
  CHECK(svgs == 6);
  REQUIRE(fs::exists("cli_enum_out/summary.json"));
  std::string summary = slurp("cli_enum_out/summary.json");
  CHECK(summary.find("\"classes\": 6") != std::string::npos);

  // Determinism: a second run writes byte-identical summary and files.
  fs::remove_all("cli_enum_out_2");
  CHECK(run_cli("enumerate --k 3 --out cli_enum_out_2 --jobs 2").status == 0);
  CHECK(slurp("cli_enum_out_2/summary.json") == summary);
  CHECK(slurp("cli_enum_out_2/class_0000.json") ==
        slurp("cli_enum_out/class_0000.json"));

  CliResult v = run_cli(
      "validate cli_enum_out/class_0000.json cli_enum_out/class_0005.json");
  CHECK(v.status == 0);
  CHECK(v.out.find("ok") != std::string::npos);

  CliResult cl = run_cli("classify --in cli_enum_out --json cli_report.json");
  CHECK(cl.status == 0);
  CHECK(cl.out.find("type") != std::string::npos);
  CHECK(fs::exists("cli_report.json"));

  CliResult rd =
      run_cli("render cli_enum_out/class_0000.json --svg cli_render.svg");
  CHECK(rd.status == 0);
  CHECK(slurp("cli_render.svg").rfind("<svg", 0) == 0);

  // Corrupt one angle-bearing byte and expect a validation failure.
  std::string doc = slurp("cli_enum_out/class_0000.json");
  auto pos = doc.find("\"dir\": 1");
  REQUIRE(pos != std::string::npos);
  doc.replace(pos, 8, "\"dir\": 2");
  std::ofstream("cli_broken.json") << doc;
  CliResult bad = run_cli("validate cli_broken.json");
  CHECK(bad.status == 1);

  CliResult missing = run_cli("validate no_such_file.json");
  CHECK(missing.status == 1);

  fs::remove_all("cli_enum_out");
  fs::remove_all("cli_enum_out_2");
  std::remove("cli_report.json");
  std::remove("cli_render.svg");
  std::remove("cli_broken.json");
}
