#include <functional>
#include <sstream>

#include "common.hpp"
#include "esdg/wall_bc.hpp"

namespace esdg::cases {

namespace {

struct Check {
  const char* name;
  std::function<double()> run;  // returns the worst defect
  double tol;
};

template <int Dim>
PrimState<Dim> random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(0.2, 5.0), u(-1.0, 1.0), T(0.3, 3.0);
  PrimState<Dim> v;
  v.rho = r(rng);
  for (auto& x : v.u) x = u(rng);
  v.T = T(rng);
  return v;
}

double sbp_defect() {
  double worst = 0.0;
  for (int p = kMinDegree; p <= kMaxDegree; ++p) {
    const auto& op = sbp_operators(p);
    for (int i = 0; i < op.n; ++i) {
      for (int j = 0; j < op.n; ++j) {
        const double b = (i == j && i == 0) ? -1.0 : (i == j && i == op.n - 1) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(op.Q(i, j) + op.Q(j, i) - b));
      }
      for (int k = 0; k <= p; ++k) {
        double d = 0.0;
        for (int j = 0; j < op.n; ++j) d += op.D(i, j) * std::pow(op.nodes[static_cast<std::size_t>(j)], k);
        const double exact = k == 0 ? 0.0 : k * std::pow(op.nodes[static_cast<std::size_t>(i)], k - 1);
        worst = std::max(worst, std::abs(d - exact) * 1e-2);
      }
    }
  }
  return worst;
}

double tadmor_defect() {
  const GasModel g = GasModel::make(1.4, 1.0, 0.0);
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int t = 0; t < 2000; ++t) {
    const auto a = random_state<2>(rng), b = random_state<2>(rng);
    const int n = t % 2;
    const auto wa = entropy_vars(g, a).c, wb = entropy_vars(g, b).c;
    const auto f = ec_two_point_flux(g, a, b, n);
    double lhs = 0.0;
    for (std::size_t k = 0; k < 4; ++k) lhs += (wb[k] - wa[k]) * f[k];
    const double rhs = entropy_potential(g, b, n) - entropy_potential(g, a, n);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    const auto fs = es_two_point_flux(g, a, b, n);
    double prod = 0.0;
    for (std::size_t k = 0; k < 4; ++k) prod += (wb[k] - wa[k]) * fs[k];
    worst = std::max(worst, (prod - rhs) > 0.0 ? 1.0 : 0.0);
  }
  return worst;
}

double wall_ip_defect() {
  const GasModel g = GasModel::make(1.4, 1.0, 0.05);
  std::mt19937_64 rng(2);
  BoundarySpec wall;
  wall.type = BoundaryType::AdiabaticWall;
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const auto v = random_state<2>(rng);
    const double beta = 3.0;
    const double got = dot(entropy_vars(g, v).c, ip_term(Model::Eulerian, g, wall, v, beta));
    const double u2 = speed2(v);
    const double want = -(2.0 * beta * g.alpha * g.mu / (g.R * v.T * v.T)) * u2 * (u2 + g.R * v.T);
    worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
  }
  return worst;
}

template <int Dim>
double budget_defect(Model model, BoundaryType type, double beta0, InterfaceFlux flux) {
  GridConfig c;
  c.dim = Dim;
  c.p = 2;
  for (int d = 0; d < Dim; ++d) {
    c.elements[static_cast<std::size_t>(d)] = 3;
    for (int s = 0; s < 2; ++s) {
      auto& b = c.boundary[static_cast<std::size_t>(2 * d + s)];
      b.type = type;
      b.g.kind = HeatFlux::Kind::Constant;
      b.g.value = 1e-3;
    }
  }
  if (type != BoundaryType::Periodic) c.boundary[static_cast<std::size_t>(2 * Dim - 1)].u_wall = {0.2, 0.1, 0.0};
  const Grid grid(c);
  const GasModel gas = GasModel::make(1.4, 1.0, 0.07);
  const Semidiscretization<Dim> semi(grid, gas, {model, flux, beta0, beta0});
  RunConfig rc;
  rc.initial.kind = "random";
  rc.initial.amplitude = 0.3;
  rc.seed = 11;
  const auto q = initial_field<Dim>(grid, gas, rc);
  std::vector<double> dq(semi.size());
  return entropy_budget(semi, q.vec(), 0.0, dq).relative_residual();
}

template <int Dim>
double conservation_defect() {
  GridConfig c;
  c.dim = Dim;
  c.p = 3;
  for (int d = 0; d < Dim; ++d) c.elements[static_cast<std::size_t>(d)] = 3;
  const Grid grid(c);
  const GasModel gas = GasModel::make(1.4, 1.0, 0.05);
  const Semidiscretization<Dim> semi(grid, gas, {Model::Eulerian, InterfaceFlux::EntropyStable, 1.0, 1.0});
  RunConfig rc;
  rc.initial.kind = "random";
  rc.initial.amplitude = 0.3;
  const auto q = initial_field<Dim>(grid, gas, rc);
  std::vector<double> dq(semi.size());
  semi.rhs(q.vec(), 0.0, dq);
  double worst = 0.0;
  for (double x : conserved_totals(grid, dq, Dim + 2)) worst = std::max(worst, std::abs(x));
  rc.initial.kind = "uniform";
  rc.initial.u = {0.1, -0.2, 0.05};
  semi.rhs(initial_field<Dim>(grid, gas, rc).vec(), 0.0, dq);
  for (double x : dq) worst = std::max(worst, std::abs(x));
  return worst;
}

double integrator_defect() {
  std::vector<double> y{1.0};
  IntegratorConfig ic;
  ic.rtol = 1e-10;
  ic.atol = 1e-12;
  integrate([](std::span<const double> x, double, std::span<double> d) { d[0] = -x[0]; }, y, ic);
  return std::abs(y[0] - std::exp(-1.0));
}

double mms_source_defect() {
  const MmsChannel ch;
  const GasModel g = GasModel::make(1.4, 1.0, 0.01);
  double worst = 0.0;
  for (int i = 1; i < 10; ++i) {
    const double r = ch.R1 + (ch.R2 - ch.R1) * i / 10.0;
    const double h = 1e-4;
    const double d2 = (ch.u(r + h) - 2.0 * ch.u(r) + ch.u(r - h)) / (h * h);
    const double k = [&](double x) { return 0.5 * ch.u(x) * ch.u(x); }(r);
    const double e2 = (0.5 * ch.u(r + h) * ch.u(r + h) - 2.0 * k + 0.5 * ch.u(r - h) * ch.u(r - h)) / (h * h);
    const auto s = ch.source(g, r, 2);
    worst = std::max(worst, std::abs(s[1] + g.mu * d2) / std::abs(s[1]));
    worst = std::max(worst, std::abs(s[3] + g.mu * e2) / std::max(1e-12, std::abs(s[3])));
  }
  return worst;
}

}  // namespace

CaseReport run_selftest(const RunConfig&) {
  const std::vector<Check> checks{
      {"sbp operators", sbp_defect, 1e-13},
      {"tadmor condition", tadmor_defect, 1e-12},
      {"wall interior penalty closed form", wall_ip_defect, 1e-12},
      {"budget eulerian 1d adiabatic", [] { return budget_defect<1>(Model::Eulerian, BoundaryType::AdiabaticWall, 1.0, InterfaceFlux::EntropyStable); }, 1e-11},
      {"budget eulerian 2d heatflux", [] { return budget_defect<2>(Model::Eulerian, BoundaryType::HeatfluxWall, 0.0, InterfaceFlux::EntropyConservative); }, 1e-11},
      {"budget eulerian 3d periodic", [] { return budget_defect<3>(Model::Eulerian, BoundaryType::Periodic, 1.0, InterfaceFlux::EntropyStable); }, 1e-11},
      {"budget cns 1d adiabatic", [] { return budget_defect<1>(Model::Cns, BoundaryType::AdiabaticWall, 1.0, InterfaceFlux::EntropyStable); }, 1e-11},
      {"conservation and free stream 2d", conservation_defect<2>, 1e-12},
      {"time integrator", integrator_defect, 1e-8},
      {"manufactured source", mms_source_defect, 1e-5},
  };
  CaseReport rep;
  rep.passed = true;
  for (const auto& c : checks) {
    double defect = 0.0;
    bool ok = false;
    try {
      defect = c.run();
      ok = defect <= c.tol;
    } catch (const std::exception& e) {
      rep.lines.push_back(std::string(c.name) + ": exception " + e.what());
    }
    std::ostringstream os;
    os.precision(3);
    os << (ok ? "PASS " : "FAIL ") << c.name << " (defect " << std::scientific << defect << ", tolerance " << c.tol << ")";
    rep.lines.push_back(os.str());
    rep.passed = rep.passed && ok;
    rep.metric = std::max(rep.metric, defect / c.tol);
  }
  rep.summary = rep.passed ? "all self checks passed" : "self check failure";
  return rep;
}

}  // namespace esdg::cases
