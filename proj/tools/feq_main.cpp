#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "feq_app/config.hpp"
#include "feq_app/report.hpp"
#include "feq_app/runner.hpp"

namespace {

constexpr int kExitConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and brute-force verify solution families of sine-cosine type functional equations"};
  std::string config_path;
  std::string report_path;
  std::optional<double> tolerance;
  std::optional<int> window;
  bool quiet = false;
  app.add_option("--config", config_path, "JSON configuration file")->required()->check(CLI::ExistingFile);
  app.add_option("--tolerance", tolerance, "absolute residual tolerance (overrides the config)")
      ->check(CLI::PositiveNumber);
  app.add_option("--window", window, "half-width W of the [-W, W] window on free coordinates")
      ->check(CLI::Range(0, 1000));
  app.add_option("--report", report_path, "write the JSON report here");
  app.add_flag("-q,--quiet", quiet, "do not print the table");
  CLI11_PARSE(app, argc, argv);

  feq::app::Report report;
  try {
    auto cfg = feq::app::load_config(config_path);
    if (tolerance) cfg.tolerance = *tolerance;
    if (window) cfg.window = *window;
    report = feq::app::run_config(cfg);
  } catch (const feq::Error& e) {
    std::cerr << "feq: " << e.what() << "\n";
    return kExitConfigError;
  }

  if (!quiet) std::cout << feq::app::render_table(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "feq: cannot write report to " << report_path << "\n";
      return kExitConfigError;
    }
    out << feq::app::to_json(report).dump(2) << "\n";
  }
  return feq::app::exit_code(report);
}
