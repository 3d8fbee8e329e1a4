#include <cmath>
#include <sstream>

#include "common.hpp"
#include "json.hpp"

namespace esdg::cases {

namespace {

struct Profile {
  Model model = Model::Eulerian;
  int grid = 0;
  std::vector<double> x;    // node coordinates in element-major order
  std::vector<double> rho;
  double peak = 0.0;
  double peak_x = 0.0;
  long steps = 0;
  std::vector<double> sampled;  // density on the common sample points
};

/// Lagrange interpolation of nodal density at point xs.
double sample(const Grid& grid, const std::vector<double>& rho, double xs) {
  const double h = grid.h(0);
  int e = static_cast<int>(std::floor((xs - grid.lo(0)) / h));
  e = std::clamp(e, 0, grid.num_elements() - 1);
  const double xi = 2.0 * (xs - (grid.lo(0) + e * h)) / h - 1.0;
  const auto& nodes = grid.op().nodes;
  const int n = grid.n();
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    double l = 1.0;
    for (int m = 0; m < n; ++m) {
      if (m != j) l *= (xi - nodes[static_cast<std::size_t>(m)]) / (nodes[static_cast<std::size_t>(j)] - nodes[static_cast<std::size_t>(m)]);
    }
    acc += l * rho[static_cast<std::size_t>(e * n + j)];
  }
  return acc;
}

/// Density sequence of the nodes nearest one wall is monotone.
bool wall_monotone(const std::vector<double>& rho, bool low_end, int count, double tol) {
  const int n = static_cast<int>(rho.size());
  int up = 0, down = 0;
  for (int i = 0; i + 1 < count && i + 1 < n; ++i) {
    const int a = low_end ? i : n - 1 - i;
    const int b = low_end ? i + 1 : n - 2 - i;
    const double d = rho[static_cast<std::size_t>(b)] - rho[static_cast<std::size_t>(a)];
    if (d > tol) ++up;
    if (d < -tol) ++down;
  }
  return up == 0 || down == 0;
}

Profile run_one(const RunConfig& base, Model model, int n) {
  RunConfig c = base;
  c.model = model;
  c.dim = 1;
  c.elements = {n, 1, 1};
  const Grid grid(grid_config(c));
  const GasModel gas = gas_model(c);
  Semidiscretization<1> semi(grid, gas, semi_options(c));
  std::vector<double> q = initial_field<1>(grid, gas, c).vec();
  const auto rhs = [&](std::span<const double> y, double t, std::span<double> d) { semi.rhs(y, t, d); };
  const auto res = integrate(rhs, q, c.integrator);
  Profile pr;
  pr.model = model;
  pr.grid = n;
  pr.steps = res.accepted;
  for (int e = 0; e < grid.num_elements(); ++e) {
    for (int k = 0; k < grid.nodes_per_element(); ++k) {
      const std::size_t a = static_cast<std::size_t>(e * grid.nodes_per_element() + k);
      pr.x.push_back(grid.node_coords(e, k)[0]);
      pr.rho.push_back(q[a * 3]);
      if (q[a * 3] > pr.peak) {
        pr.peak = q[a * 3];
        pr.peak_x = pr.x.back();
      }
    }
  }
  const int samples = 2 * base.grids.front();
  const double L = grid.hi(0) - grid.lo(0);
  for (int i = 0; i < samples; ++i) pr.sampled.push_back(sample(grid, pr.rho, grid.lo(0) + (i + 0.5) * L / samples));
  return pr;
}

double rms_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s / static_cast<double>(a.size()));
}

}  // namespace

CaseReport run_blast(const RunConfig& cfg) {
  if (cfg.dim != 1) throw ConfigError("blast case is one-dimensional");
  if (cfg.grids.size() < 2) throw ConfigError("blast case needs at least two grids");
  CaseReport rep;
  const bool files = !prepare_output(cfg).empty();
  std::vector<Profile> eul, cns;
  for (int n : cfg.grids) {
    eul.push_back(run_one(cfg, Model::Eulerian, n));
    cns.push_back(run_one(cfg, Model::Cns, n));
  }

  bool peaks_ok = true, walls_ok = true, diffs_ok = true;
  nlohmann::json results;
  std::ostringstream os;
  os.precision(10);
  for (std::size_t i = 0; i < eul.size(); ++i) {
    os.str("");
    os << "grid " << eul[i].grid << ": peak rho eulerian " << eul[i].peak << " at x = " << eul[i].peak_x
       << ", cns " << cns[i].peak << " at x = " << cns[i].peak_x;
    rep.lines.push_back(os.str());
    if (i + 2 >= eul.size() && !(eul[i].peak < cns[i].peak)) peaks_ok = false;
    for (const Profile* p : {&eul[i], &cns[i]}) {
      const double tol = 1e-10 * p->peak;
      if (!wall_monotone(p->rho, true, 5, tol) || !wall_monotone(p->rho, false, 5, tol)) {
        walls_ok = false;
        rep.lines.push_back(std::string("boundary-adjacent anomaly: ") + to_string(p->model) + " grid " +
                            std::to_string(p->grid));
      }
    }
    results["grid_" + std::to_string(eul[i].grid)] = {{"eulerian_peak", eul[i].peak}, {"eulerian_peak_x", eul[i].peak_x},
                                                      {"cns_peak", cns[i].peak},      {"cns_peak_x", cns[i].peak_x},
                                                      {"eulerian_steps", eul[i].steps}, {"cns_steps", cns[i].steps}};
  }
  for (const auto* seq : {&eul, &cns}) {
    std::vector<double> d;
    for (std::size_t i = 0; i + 1 < seq->size(); ++i) d.push_back(rms_difference((*seq)[i].sampled, (*seq)[i + 1].sampled));
    os.str("");
    os.precision(4);
    os << to_string(seq->front().model) << " inter-grid L2 differences:";
    for (double x : d) os << ' ' << std::scientific << x;
    rep.lines.push_back(os.str());
    for (std::size_t i = 0; i + 1 < d.size(); ++i) diffs_ok = diffs_ok && d[i + 1] <= d[i];
    results[std::string(to_string(seq->front().model)) + "_differences"] = d;
  }
  rep.passed = peaks_ok && walls_ok && diffs_ok;
  rep.metric = cns.back().peak - eul.back().peak;
  rep.summary = std::string(peaks_ok ? "eulerian peak below cns peak on the finest grids" : "eulerian peak not below cns peak") +
                (walls_ok ? "" : "; wall anomaly") + (diffs_ok ? "" : "; inter-grid differences increase");
  results["passed"] = rep.passed;

  if (files) {
    for (const auto* seq : {&eul, &cns}) {
      for (const auto& p : *seq) {
        const std::string path = output_path(cfg, std::string("blast_") + to_string(p.model) + "_" + std::to_string(p.grid) + ".csv");
        CsvWriter out(path, {"x", "rho"});
        for (std::size_t i = 0; i < p.x.size(); ++i) out.row({p.x[i], p.rho[i]});
        rep.files.push_back(path);
      }
    }
    rep.files.insert(rep.files.begin(), prepare_output(cfg, results.dump()));
  }
  return rep;
}

}  // namespace esdg::cases
