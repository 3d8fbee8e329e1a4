#include "esdg/esdg.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <variant>

#include "../cases/common.hpp"
#include "esdg/cases.hpp"
#include "esdg/diagnostics.hpp"

struct esdg_config {
  esdg::cases::RunConfig cfg;
};

struct esdg_report {
  esdg::cases::CaseReport rep;
};

struct esdg_solver {
  std::unique_ptr<esdg::Grid> grid;
  esdg::GasModel gas;
  esdg::cases::RunConfig cfg;
  std::variant<std::unique_ptr<esdg::Semidiscretization<1>>, std::unique_ptr<esdg::Semidiscretization<2>>,
               std::unique_ptr<esdg::Semidiscretization<3>>>
      semi;
};

namespace {

thread_local std::string g_last_error;

esdg_status fail(esdg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
esdg_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const esdg::ConfigError& e) {
    return fail(ESDG_ERR_CONFIG, e.what());
  } catch (const esdg::InvalidDegree& e) {
    return fail(ESDG_ERR_DEGREE, e.what());
  } catch (const esdg::ShapeMismatch& e) {
    return fail(ESDG_ERR_SHAPE, e.what());
  } catch (const esdg::NonphysicalState& e) {
    return fail(ESDG_ERR_NONPHYSICAL, e.what());
  } catch (const esdg::IntegrationFailure& e) {
    return fail(ESDG_ERR_INTEGRATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ESDG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ESDG_ERR_INTERNAL, e.what());
  }
}

bool uses_grid_sequence(const esdg::cases::RunConfig& c) {
  return c.case_name == "mms" || c.case_name == "blast";
}

}  // namespace

extern "C" {

const char* esdg_last_error(void) { return g_last_error.c_str(); }

const char* esdg_build_id(void) { return esdg::cases::build_id(); }

const char* esdg_status_name(esdg_status s) {
  switch (s) {
    case ESDG_OK: return "ok";
    case ESDG_ERR_ARGUMENT: return "invalid argument";
    case ESDG_ERR_CONFIG: return "configuration error";
    case ESDG_ERR_DEGREE: return "invalid degree";
    case ESDG_ERR_SHAPE: return "shape mismatch";
    case ESDG_ERR_NONPHYSICAL: return "nonphysical state";
    case ESDG_ERR_INTEGRATION: return "integration failure";
    case ESDG_ERR_IO: return "i/o error";
    case ESDG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

esdg_status esdg_config_new(const char* case_name, esdg_config** out) {
  if (!out) return fail(ESDG_ERR_ARGUMENT, "null output handle");
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<esdg_config>();
    c->cfg = esdg::cases::default_config(case_name ? case_name : "run");
    *out = c.release();
    return ESDG_OK;
  });
}

void esdg_config_free(esdg_config* cfg) { delete cfg; }

esdg_status esdg_config_load_file(esdg_config* cfg, const char* path) {
  if (!cfg || !path) return fail(ESDG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg = esdg::cases::load_config(path, cfg->cfg);
    return ESDG_OK;
  });
}

esdg_status esdg_config_load_string(esdg_config* cfg, const char* json) {
  if (!cfg || !json) return fail(ESDG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg = esdg::cases::parse_config(json, cfg->cfg);
    return ESDG_OK;
  });
}

esdg_status esdg_config_set_p(esdg_config* cfg, int p) {
  if (!cfg) return fail(ESDG_ERR_ARGUMENT, "null config");
  if (p < esdg::kMinDegree || p > esdg::kMaxDegree) {
    return fail(ESDG_ERR_DEGREE, "degree must lie in [" + std::to_string(esdg::kMinDegree) + ", " +
                                     std::to_string(esdg::kMaxDegree) + "]");
  }
  cfg->cfg.p = p;
  if (cfg->cfg.case_name == "mms") cfg->cfg.degrees = {p};
  return ESDG_OK;
}

esdg_status esdg_config_set_elements(esdg_config* cfg, const int* counts, size_t n) {
  if (!cfg || !counts || n == 0) return fail(ESDG_ERR_ARGUMENT, "empty element list");
  for (size_t i = 0; i < n; ++i) {
    if (counts[i] < 1) return fail(ESDG_ERR_CONFIG, "element counts must be positive");
  }
  auto& c = cfg->cfg;
  if (uses_grid_sequence(c)) {
    c.grids.assign(counts, counts + n);
    return ESDG_OK;
  }
  if (n != 1 && n != static_cast<size_t>(c.dim)) return fail(ESDG_ERR_CONFIG, "give one element count or one per direction");
  for (int d = 0; d < 3; ++d) c.elements[static_cast<std::size_t>(d)] = n == 1 ? counts[0] : (d < c.dim ? counts[d] : 1);
  return ESDG_OK;
}

esdg_status esdg_config_set_model(esdg_config* cfg, const char* model) {
  if (!cfg || !model) return fail(ESDG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg.model = esdg::model_from_string(model);
    return ESDG_OK;
  });
}

esdg_status esdg_config_set_beta0(esdg_config* cfg, double beta0) {
  if (!cfg) return fail(ESDG_ERR_ARGUMENT, "null config");
  if (!(beta0 >= 0.0)) return fail(ESDG_ERR_CONFIG, "beta0 must be nonnegative");
  cfg->cfg.beta0 = beta0;
  return ESDG_OK;
}

esdg_status esdg_config_set_output(esdg_config* cfg, const char* dir) {
  if (!cfg || !dir) return fail(ESDG_ERR_ARGUMENT, "null argument");
  cfg->cfg.output_dir = dir;
  return ESDG_OK;
}

esdg_status esdg_config_to_json(const esdg_config* cfg, char* buf, size_t len, size_t* needed) {
  if (!cfg) return fail(ESDG_ERR_ARGUMENT, "null config");
  return guarded([&] {
    const std::string s = esdg::cases::config_to_json(cfg->cfg);
    if (needed) *needed = s.size() + 1;
    if (!buf) return ESDG_OK;
    if (len < s.size() + 1) return fail(ESDG_ERR_ARGUMENT, "buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return ESDG_OK;
  });
}

esdg_status esdg_run(const esdg_config* cfg, esdg_report** out) {
  if (!cfg || !out) return fail(ESDG_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<esdg_report>();
    r->rep = esdg::cases::run_case(cfg->cfg);
    *out = r.release();
    return ESDG_OK;
  });
}

void esdg_report_free(esdg_report* r) { delete r; }

int esdg_report_passed(const esdg_report* r) { return r && r->rep.passed ? 1 : 0; }

double esdg_report_metric(const esdg_report* r) { return r ? r->rep.metric : 0.0; }

const char* esdg_report_summary(const esdg_report* r) { return r ? r->rep.summary.c_str() : ""; }

size_t esdg_report_line_count(const esdg_report* r) { return r ? r->rep.lines.size() : 0; }

const char* esdg_report_line(const esdg_report* r, size_t i) {
  return r && i < r->rep.lines.size() ? r->rep.lines[i].c_str() : "";
}

size_t esdg_report_file_count(const esdg_report* r) { return r ? r->rep.files.size() : 0; }

const char* esdg_report_file(const esdg_report* r, size_t i) {
  return r && i < r->rep.files.size() ? r->rep.files[i].c_str() : "";
}

esdg_status esdg_solver_new(const esdg_config* cfg, esdg_solver** out) {
  if (!cfg || !out) return fail(ESDG_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<esdg_solver>();
    s->cfg = cfg->cfg;
    s->grid = std::make_unique<esdg::Grid>(esdg::cases::grid_config(s->cfg));
    s->gas = esdg::cases::gas_model(s->cfg);
    const auto opt = esdg::cases::semi_options(s->cfg);
    switch (s->cfg.dim) {
      case 1: s->semi = std::make_unique<esdg::Semidiscretization<1>>(*s->grid, s->gas, opt); break;
      case 2: s->semi = std::make_unique<esdg::Semidiscretization<2>>(*s->grid, s->gas, opt); break;
      case 3: s->semi = std::make_unique<esdg::Semidiscretization<3>>(*s->grid, s->gas, opt); break;
      default: throw esdg::ConfigError("ndim must be 1, 2 or 3");
    }
    *out = s.release();
    return ESDG_OK;
  });
}

void esdg_solver_free(esdg_solver* s) { delete s; }

size_t esdg_solver_size(const esdg_solver* s) {
  if (!s) return 0;
  return std::visit([](const auto& p) { return p->size(); }, s->semi);
}

esdg_status esdg_solver_initial_state(const esdg_solver* s, double* q, size_t n) {
  if (!s || !q) return fail(ESDG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (n != esdg_solver_size(s)) return fail(ESDG_ERR_SHAPE, "state buffer has wrong length");
    std::vector<double> v;
    switch (s->cfg.dim) {
      case 1: v = esdg::cases::initial_field<1>(*s->grid, s->gas, s->cfg).vec(); break;
      case 2: v = esdg::cases::initial_field<2>(*s->grid, s->gas, s->cfg).vec(); break;
      default: v = esdg::cases::initial_field<3>(*s->grid, s->gas, s->cfg).vec(); break;
    }
    std::copy(v.begin(), v.end(), q);
    return ESDG_OK;
  });
}

esdg_status esdg_solver_rhs(const esdg_solver* s, const double* q, size_t n, double t, double* dqdt) {
  if (!s || !q || !dqdt) return fail(ESDG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::visit([&](const auto& p) { p->rhs(std::span<const double>(q, n), t, std::span<double>(dqdt, n)); }, s->semi);
    return ESDG_OK;
  });
}

esdg_status esdg_solver_budget(const esdg_solver* s, const double* q, size_t n, double t, esdg_budget* out) {
  if (!s || !q || !out) return fail(ESDG_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<double> dq(n);
    const esdg::EntropyBudget b = std::visit(
        [&](const auto& p) { return esdg::entropy_budget(*p, std::span<const double>(q, n), t, dq); }, s->semi);
    *out = {b.dSdt, b.DT, b.Xi, b.boundary_data, b.source, b.residual};
    return ESDG_OK;
  });
}

}  // extern "C"
