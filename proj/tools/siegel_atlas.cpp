#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "siegel/atlas.hpp"
#include "siegel/error.hpp"

namespace {

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Totally geodesic loci from abelian group actions: Cartan data and symmetric space labels"};
  app.require_subcommand(1);

  std::string family, input, out;
  std::string backend_name = "exact", emit = "text";
  auto* run = app.add_subcommand("run", "run the pipeline on one fixture or configuration file");
  auto* fam_opt = run->add_option("--family", family, "fixture id, e.g. (10) or (6e)");
  run->add_option("--input", input, "configuration document")->excludes(fam_opt);
  run->add_option("--backend", backend_name)->check(CLI::IsMember({"exact", "crosscheck"}));
  run->add_option("--emit", emit)->check(CLI::IsMember({"json", "text"}));
  run->add_option("--out", out, "write the report here instead of stdout");

  std::string check_out;
  std::string check_backend = "crosscheck";
  auto* check = app.add_subcommand("check", "regression over every fixture; exit code = number of failures");
  check->add_option("--backend", check_backend)->check(CLI::IsMember({"exact", "crosscheck"}));
  check->add_option("--out", check_out, "also write the JSON summary here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const auto backend = backend_name == "crosscheck" ? siegel::Backend::Crosscheck : siegel::Backend::Exact;
      siegel::Report report;
      if (!input.empty()) {
        report = siegel::run_input(siegel::read_input_file(input), backend);
      } else if (!family.empty()) {
        report = siegel::run_family(siegel::find_fixture(family), backend);
        report.requested_id = family;
      } else {
        std::cerr << "run: one of --family or --input is required\n";
        return 2;
      }
      write_output(emit == "json" ? siegel::to_json(report).dump(2) + "\n" : siegel::render_text(report), out);
      return report.pass() ? 0 : 1;
    }
    const auto backend = check_backend == "crosscheck" ? siegel::Backend::Crosscheck : siegel::Backend::Exact;
    const auto summary = siegel::run_all({}, backend);
    for (const auto& r : summary.reports)
      std::cout << (r.pass() ? "ok   " : "FAIL ") << r.fixture_id << "  " << r.label << "\n";
    std::cout << summary.reports.size() << " fixtures, " << summary.failures << " failures\n";
    if (!check_out.empty()) write_output(siegel::to_json(summary).dump(2) + "\n", check_out);
    return std::min(summary.failures, 125);
  } catch (const siegel::Error& e) {
    std::cerr << "error [" << siegel::to_string(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
