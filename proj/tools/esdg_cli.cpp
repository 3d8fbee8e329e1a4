#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esdg/esdg.h"

namespace {

struct Overrides {
  std::string config;
  std::optional<int> p;
  std::vector<int> elements;
  std::optional<std::string> model;
  std::optional<double> beta0;
  std::optional<std::string> out;
  bool heatflux = false;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("config", o.config, "JSON run configuration");
  sub->add_option("--p", o.p, "polynomial degree");
  sub->add_option("--elements", o.elements, "elements per direction, or the grid sequence for mms and blast")
      ->delimiter(',');
  sub->add_option("--model", o.model, "eulerian or cns");
  sub->add_option("--beta0", o.beta0, "wall interior-penalty strength");
  sub->add_option("--out", o.out, "output directory");
}

int config_error(const char* what) {
  std::cerr << "config error: " << what << '\n';
  return 2;
}

int execute(const std::string& case_name, const Overrides& o) {
  esdg_config* cfg = nullptr;
  if (esdg_config_new(case_name.c_str(), &cfg) != ESDG_OK) return config_error(esdg_last_error());
  auto check = [&](esdg_status s) { return s == ESDG_OK; };
  bool ok = true;
  if (!o.config.empty()) ok = check(esdg_config_load_file(cfg, o.config.c_str()));
  if (ok && o.p) ok = check(esdg_config_set_p(cfg, *o.p));
  if (ok && !o.elements.empty()) ok = check(esdg_config_set_elements(cfg, o.elements.data(), o.elements.size()));
  if (ok && o.model) ok = check(esdg_config_set_model(cfg, o.model->c_str()));
  if (ok && o.beta0) ok = check(esdg_config_set_beta0(cfg, *o.beta0));
  if (ok && o.out) ok = check(esdg_config_set_output(cfg, o.out->c_str()));
  if (!ok) {
    const int rc = config_error(esdg_last_error());
    esdg_config_free(cfg);
    return rc;
  }
  esdg_report* rep = nullptr;
  const esdg_status st = esdg_run(cfg, &rep);
  esdg_config_free(cfg);
  if (st == ESDG_ERR_CONFIG || st == ESDG_ERR_DEGREE) return config_error(esdg_last_error());
  if (st != ESDG_OK) {
    std::cerr << case_name << ": " << esdg_status_name(st) << ": " << esdg_last_error() << '\n';
    return 1;
  }
  for (std::size_t i = 0; i < esdg_report_line_count(rep); ++i) std::cout << esdg_report_line(rep, i) << '\n';
  for (std::size_t i = 0; i < esdg_report_file_count(rep); ++i) std::cout << "wrote " << esdg_report_file(rep, i) << '\n';
  const bool passed = esdg_report_passed(rep) != 0;
  std::cout << (passed ? "PASS " : "FAIL ") << case_name << ": " << esdg_report_summary(rep) << '\n';
  esdg_report_free(rep);
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-stable DG solver for the Eulerian and classical compressible flow models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(esdg_build_id()));

  Overrides o;
  auto* run = app.add_subcommand("run", "free run from a configuration file");
  auto* mms = app.add_subcommand("mms", "manufactured-solution convergence study in a channel");
  auto* audit = app.add_subcommand("entropy-audit", "entropy budget audit in a walled box");
  auto* blast = app.add_subcommand("blast", "one-dimensional blast wave, eulerian against cns");
  auto* self = app.add_subcommand("selftest", "fast property checks of every module");
  for (auto* s : {run, mms, audit, blast}) add_common(s, o);
  audit->add_flag("--heatflux", o.heatflux, "heat-flux walls with constant g instead of a moving lid");
  (void)self;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  if (name == "entropy-audit" && o.heatflux) name = "heatflux-audit";
  return execute(name, o);
}
