// Batch runner over the model catalogs: constructs the catalog objects at
// the requested truncation, executes the selected verification suites and
// emits a structured JSON report. Exit codes: 0 all checks pass, 1 a
// non-injected check failed, 2 invalid configuration.

#include "coadm/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{
      "coadm: verification suites for truncated p-adic coalgebras, comodules and "
      "admissible structures"};

  coadm::RunConfig cfg;
  std::string suites = "all";
  bool no_timing = false;

  app.add_option("--prime", cfg.prime, "prime p of the base field Q_p")->capture_default_str();
  app.add_option("--precision", cfg.precision, "working relative precision in p-adic digits")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol_exp, "tolerance exponent: checks pass below p^-tol")
      ->capture_default_str();
  app.add_option("--rank", cfg.rank, "truncation rank of the model catalog")
      ->capture_default_str();
  app.add_option("--window", cfg.window, "window depth for limit systems")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all randomized checks")->capture_default_str();
  app.add_option("--suite", suites, "comma list of suites: coalg,comod,limits,adm or 'all'")
      ->capture_default_str();
  app.add_option("--inject", cfg.inject,
                 "defect injection: none, enlarge-level:N, corrupt-delta, corrupt-antipode, "
                 "corrupt-transition:N")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "report path (stdout when omitted)");
  app.add_flag("--no-timing", no_timing, "omit timing fields (byte-stable reports)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (suites != "all") {
      cfg.suites.clear();
      std::stringstream ss(suites);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) cfg.suites.push_back(item);
    }
    cfg.validate();

    coadm::RunReport report = coadm::run_suites(cfg);
    std::string text = report.to_json(!no_timing).dump(2);
    if (cfg.out.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw coadm::ConfigInvalid("cannot open output path " + cfg.out);
      f << text << "\n";
    }

    int failures = 0;
    for (const auto& r : report.records)
      if (!r.injected && !r.pass) ++failures;
    if (failures) {
      std::cerr << failures << " check(s) failed\n";
      return 1;
    }
    return 0;
  } catch (const coadm::ConfigInvalid& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
