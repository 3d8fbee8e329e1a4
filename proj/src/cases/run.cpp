#include <algorithm>
#include <memory>
#include <sstream>

#include "common.hpp"
#include "json.hpp"

namespace esdg::cases {

namespace {

struct AuditStats {
  double identity = 0.0;      // max |dSdt + DT - Xi - source| / scale
  double conservation = 0.0;  // max |dSdt + DT - boundary data| / scale
  double production = -1e300; // max (dSdt + DT - boundary data) / scale
};

void write_state(const std::string& path, const Grid& grid, std::span<const double> q, int nvar) {
  std::vector<std::string> header{"element", "node", "x1", "x2", "x3"};
  for (int c = 0; c < nvar; ++c) header.push_back("q" + std::to_string(c));
  CsvWriter out(path, header);
  std::vector<double> row;
  for (int e = 0; e < grid.num_elements(); ++e) {
    for (int k = 0; k < grid.nodes_per_element(); ++k) {
      const auto x = grid.node_coords(e, k);
      row.assign({static_cast<double>(e), static_cast<double>(k), x[0], x[1], x[2]});
      const std::size_t a = (static_cast<std::size_t>(e) * static_cast<std::size_t>(grid.nodes_per_element()) +
                             static_cast<std::size_t>(k)) * static_cast<std::size_t>(nvar);
      for (int c = 0; c < nvar; ++c) row.push_back(q[a + static_cast<std::size_t>(c)]);
      out.row(row);
    }
  }
}

template <int Dim>
CaseReport evolve(const RunConfig& cfg, bool audit) {
  constexpr int nv = Dim + 2;
  const Grid grid(grid_config(cfg));
  const GasModel gas = gas_model(cfg);
  const Semidiscretization<Dim> semi(grid, gas, semi_options(cfg));
  FieldArray q0 = initial_field<Dim>(grid, gas, cfg);
  std::vector<double> q = q0.vec();

  CaseReport rep;
  const bool files = !prepare_output(cfg).empty();
  std::vector<std::string> header{"t", "dSdt", "DT", "Xi", "boundary_data", "ip", "residual"};
  for (int c = 0; c < nv; ++c) header.push_back("total_q" + std::to_string(c));
  header.push_back("entropy");
  std::unique_ptr<CsvWriter> budget_csv, step_csv;
  if (files) {
    budget_csv = std::make_unique<CsvWriter>(output_path(cfg, "budget.csv"), header);
    step_csv = std::make_unique<CsvWriter>(output_path(cfg, "steps.csv"),
                                           std::vector<std::string>{"t", "dt", "accepted", "error"});
  }

  AuditStats st;
  std::vector<double> dq(semi.size());
  auto record = [&](double t, std::span<const double> y) {
    const EntropyBudget b = entropy_budget(semi, y, t, dq);
    st.identity = std::max(st.identity, b.relative_residual());
    const double scale = std::max({1.0, std::abs(b.dSdt), std::abs(b.DT), std::abs(b.boundary_data)});
    const double net = b.dSdt + b.DT - b.boundary_data - b.source;
    st.conservation = std::max(st.conservation, std::abs(net) / scale);
    st.production = std::max(st.production, net / scale);
    if (budget_csv) {
      std::vector<double> row{t, b.dSdt, b.DT, b.Xi, b.boundary_data, b.ip, b.residual};
      for (double x : conserved_totals(grid, y, nv)) row.push_back(x);
      row.push_back(total_entropy(semi, y));
      budget_csv->row(row);
    }
  };
  record(cfg.integrator.t_start, q);

  const auto rhs = [&](std::span<const double> y, double t, std::span<double> d) { semi.rhs(y, t, d); };
  IntegrationResult res;
  try {
    res = integrate(rhs, q, cfg.integrator, [&](const StepInfo& info, std::span<const double> y) {
      record(info.t, y);
      return true;
    });
  } catch (const IntegrationFailure& e) {
    rep.passed = false;
    rep.summary = std::string("integration failed: ") + e.what();
    rep.lines.push_back(rep.summary);
    return rep;
  } catch (const NonphysicalState& e) {
    rep.passed = false;
    rep.summary = std::string("integration failed: ") + e.what();
    rep.lines.push_back(rep.summary);
    return rep;
  }
  if (step_csv) {
    for (const auto& s : res.log) step_csv->row({s.t, s.dt, s.accepted ? 1.0 : 0.0, s.error});
  }

  const bool conservative = cfg.flux == InterfaceFlux::EntropyConservative && cfg.beta0 == 0.0 &&
                            cfg.beta_interface == 0.0;
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << "steps " << res.accepted << " (rejected " << res.rejected << "), t = " << res.t
     << ", max budget residual " << st.identity;
  rep.lines.push_back(os.str());
  os.str("");
  if (audit) {
    if (conservative) {
      rep.metric = st.conservation;
      rep.passed = st.conservation <= cfg.budget_tol && st.identity <= cfg.budget_tol;
      os << "max |dSdt + DT - boundary data| / scale = " << st.conservation << " (tolerance " << cfg.budget_tol << ")";
    } else {
      rep.metric = st.production;
      rep.passed = st.production <= cfg.budget_tol && st.identity <= cfg.budget_tol;
      os << "max (dSdt + DT - boundary data) / scale = " << st.production << " (must be <= " << cfg.budget_tol << ")";
    }
  } else {
    rep.metric = st.identity;
    rep.passed = st.identity <= cfg.budget_tol;
    os << "budget identity residual " << st.identity << " (tolerance " << cfg.budget_tol << ")";
  }
  rep.lines.push_back(os.str());
  rep.summary = rep.lines.back();

  if (files) {
    write_state(output_path(cfg, "state.csv"), grid, q, nv);
    nlohmann::json r = {{"passed", rep.passed},         {"accepted_steps", res.accepted},
                        {"rejected_steps", res.rejected}, {"t_final", res.t},
                        {"max_budget_residual", st.identity}, {"max_conservation_defect", st.conservation},
                        {"max_production", st.production}};
    rep.files = {prepare_output(cfg, r.dump()), budget_csv->path(), step_csv->path(), output_path(cfg, "state.csv")};
  }
  return rep;
}

template <class F>
CaseReport by_dim(int dim, F&& f) {
  switch (dim) {
    case 1: return f.template operator()<1>();
    case 2: return f.template operator()<2>();
    case 3: return f.template operator()<3>();
    default: throw ConfigError("ndim must be 1, 2 or 3");
  }
}

}  // namespace

CaseReport run_free(const RunConfig& cfg) {
  return by_dim(cfg.dim, [&]<int D>() { return evolve<D>(cfg, false); });
}

CaseReport run_entropy_audit(const RunConfig& cfg) {
  return by_dim(cfg.dim, [&]<int D>() { return evolve<D>(cfg, true); });
}

CaseReport run_case(const RunConfig& cfg) {
  const std::string& c = cfg.case_name;
  if (c == "run") return run_free(cfg);
  if (c == "mms") return run_mms(cfg);
  if (c == "entropy-audit" || c == "heatflux-audit") return run_entropy_audit(cfg);
  if (c == "blast") return run_blast(cfg);
  if (c == "selftest") return run_selftest(cfg);
  throw ConfigError("unknown case '" + c + "'");
}

}  // namespace esdg::cases
