#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "esdg/cases.hpp"
#include "esdg/diagnostics.hpp"
#include "esdg/semidiscretization.hpp"

namespace esdg::cases {

const char* build_id();

/// CSV writer with a header row and 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
};

/// Creates the output directory and writes metadata.json.  Returns "" when
/// output is disabled.
std::string prepare_output(const RunConfig& cfg, const std::string& extra_json = "{}");

std::string output_path(const RunConfig& cfg, const std::string& name);

template <int Dim>
FieldArray initial_field(const Grid& grid, const GasModel& gas, const RunConfig& cfg) {
  const InitialCondition& ic = cfg.initial;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const MmsChannel channel;
  return project_function<Dim>(grid, gas, [&](const std::array<double, 3>& x) {
    PrimState<Dim> v;
    v.rho = ic.rho;
    v.T = ic.T;
    for (int i = 0; i < Dim; ++i) v.u[static_cast<std::size_t>(i)] = ic.u[static_cast<std::size_t>(i)];
    if (ic.kind == "uniform") return v;
    if (ic.kind == "random") {
      v.rho *= 1.0 + ic.amplitude * uni(rng);
      v.T *= 1.0 + ic.amplitude * uni(rng);
      for (auto& u : v.u) u += ic.amplitude * uni(rng);
      return v;
    }
    if (ic.kind == "blast") {
      double r2 = 0.0;
      for (int i = 0; i < Dim; ++i) r2 += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      v.rho = ic.rho * (1.0 + ic.amplitude * std::exp(-r2 / (ic.width * ic.width)));
      // Isentropic pulse: p = rho^gamma in units with p = rho R T.
      v.T = ic.T * std::pow(v.rho / ic.rho, gas.gamma - 1.0);
      return v;
    }
    if (ic.kind == "mms") {
      if constexpr (Dim >= 2) {
        v.u.fill(0.0);
        v.u[0] = channel.u(x[1]);
        return v;
      } else {
        throw ConfigError("initial kind 'mms' requires ndim >= 2");
      }
    }
    throw ConfigError("unknown initial kind '" + ic.kind + "'");
  });
}

inline SemidiscreteOptions semi_options(const RunConfig& cfg) {
  return {cfg.model, cfg.flux, cfg.beta_interface, cfg.beta0};
}

std::string format_double(double x);

}  // namespace esdg::cases
