#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "esdg/cases.hpp"
#include "esdg/error.hpp"
#include "json.hpp"

namespace esdg::cases {

using nlohmann::json;

namespace {

const std::array<const char*, 6> kFaceKeys{"x1-", "x1+", "x2-", "x2+", "x3-", "x3+"};

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("unknown config key '" + (where.empty() ? key : where + "." + key) + "'");
  }
}

template <class T>
void read(const json& j, const char* key, T& dst, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + (where.empty() ? std::string(key) : where + "." + key) + "' has the wrong type");
  }
}

void read_dt_max(const json& j, double& dst) {
  if (!j.contains("dt_max")) return;
  const auto& v = j.at("dt_max");
  if (v.is_null()) {
    dst = std::numeric_limits<double>::infinity();
  } else if (v.is_number()) {
    dst = v.get<double>();
  } else {
    throw ConfigError("config key 'integrator.dt_max' has the wrong type");
  }
}

template <std::size_t N, class T>
void read_array(const json& j, const char* key, std::array<T, N>& dst, const std::string& where) {
  if (!j.contains(key)) return;
  const auto& a = j.at(key);
  const std::string name = where.empty() ? std::string(key) : where + "." + key;
  if (!a.is_array() || a.size() > N || a.empty()) throw ConfigError("config key '" + name + "' must be an array of 1.." + std::to_string(N) + " numbers");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) throw ConfigError("config key '" + name + "' must hold numbers");
    dst[i] = a[i].get<T>();
  }
}

InterfaceFlux flux_from_string(const std::string& s) {
  if (s == "entropy_conservative" || s == "ec") return InterfaceFlux::EntropyConservative;
  if (s == "entropy_stable" || s == "es") return InterfaceFlux::EntropyStable;
  throw ConfigError("unknown flux '" + s + "'");
}

const char* heat_kind_name(HeatFlux::Kind k) {
  switch (k) {
    case HeatFlux::Kind::Constant: return "constant";
    case HeatFlux::Kind::Sinusoidal: return "sinusoidal";
    case HeatFlux::Kind::Zero: break;
  }
  return "zero";
}

HeatFlux::Kind heat_kind(const std::string& s) {
  if (s == "zero") return HeatFlux::Kind::Zero;
  if (s == "constant") return HeatFlux::Kind::Constant;
  if (s == "sinusoidal") return HeatFlux::Kind::Sinusoidal;
  throw ConfigError("unknown heat_flux kind '" + s + "'");
}

BoundaryType wall_type(const std::string& s) {
  if (s == "adiabatic") return BoundaryType::AdiabaticWall;
  if (s == "isothermal") return BoundaryType::IsothermalWall;
  if (s == "heatflux") return BoundaryType::HeatfluxWall;
  return boundary_type_from_string(s);
}

void read_boundary(const json& j, const std::string& where, BoundarySpec& b) {
  check_keys(j, where, {"type", "u_wall", "T_wall", "heat_flux"});
  if (j.contains("type")) {
    std::string t;
    read(j, "type", t, where);
    b.type = wall_type(t);
  }
  read_array(j, "u_wall", b.u_wall, where);
  read(j, "T_wall", b.T_wall, where);
  if (j.contains("heat_flux")) {
    const auto& h = j.at("heat_flux");
    const std::string hw = where + ".heat_flux";
    check_keys(h, hw, {"kind", "value", "a", "omega"});
    std::string kind = heat_kind_name(b.g.kind);
    read(h, "kind", kind, hw);
    b.g.kind = heat_kind(kind);
    read(h, "value", b.g.value, hw);
    read(h, "a", b.g.a, hw);
    read(h, "omega", b.g.omega, hw);
  }
}

BoundarySpec wall(BoundaryType t) {
  BoundarySpec b;
  b.type = t;
  return b;
}

}  // namespace

RunConfig default_config(const std::string& case_name) {
  RunConfig c;
  c.case_name = case_name;
  if (case_name == "run" || case_name == "selftest") return c;
  if (case_name == "mms") {
    const MmsChannel ch;
    c.dim = 2;
    c.p = 3;
    c.Re = 1.0;
    c.Ma = 1e-3;
    c.lo = {0.0, ch.R1, 0.0};
    c.hi = {ch.R2 - ch.R1, ch.R2, 1.0};
    c.boundary[2] = c.boundary[3] = wall(BoundaryType::AdiabaticWall);
    c.flux = InterfaceFlux::EntropyStable;
    c.beta0 = 1.0;
    c.initial.kind = "mms";
    c.integrator.t_end = 20.0;
    c.steady_tol = 1e-12;
    c.grids = {4, 8, 16, 32};
    c.degrees = {2, 3, 4};
    return c;
  }
  if (case_name == "entropy-audit" || case_name == "heatflux-audit") {
    c.dim = 2;
    c.p = 5;
    c.elements = {8, 8, 1};
    c.Re = 1.0;
    c.Ma = 0.05;
    c.flux = InterfaceFlux::EntropyConservative;
    c.beta0 = 0.0;
    c.beta_interface = 0.0;
    const bool heat = case_name == "heatflux-audit";
    for (auto& b : c.boundary) {
      b = wall(heat ? BoundaryType::HeatfluxWall : BoundaryType::AdiabaticWall);
      if (heat) {
        b.g.kind = HeatFlux::Kind::Constant;
        b.g.value = 1e-3;
      }
    }
    c.boundary[4] = c.boundary[5] = BoundarySpec{};
    if (!heat) c.boundary[3].u_wall = {0.05 * std::sqrt(c.gamma * c.R), 0.0, 0.0};
    c.integrator.t_end = 1e6;
    c.integrator.max_steps = heat ? 200 : 1000;
    c.budget_tol = 1e-11;
    return c;
  }
  if (case_name == "blast") {
    c.dim = 1;
    c.p = 1;
    c.lo = {-0.5, 0.0, 0.0};
    c.hi = {0.5, 1.0, 1.0};
    c.Re = 10.0;
    c.Ma = 0.07;
    c.boundary[0] = c.boundary[1] = wall(BoundaryType::AdiabaticWall);
    c.flux = InterfaceFlux::EntropyStable;
    c.beta0 = 1.0;
    c.initial.kind = "blast";
    c.initial.amplitude = 9.0;
    c.initial.width = 0.01;
    c.integrator.t_end = 0.01;
    // Looser tolerances let step-control noise reach the quiescent wall region.
    c.integrator.rtol = 1e-11;
    c.integrator.atol = 1e-11;
    c.grids = {2048, 4096, 8192};
    return c;
  }
  throw ConfigError("unknown case '" + case_name + "'");
}

RunConfig parse_config(const std::string& json_text, RunConfig c) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  check_keys(j, "", {"case", "model", "ndim", "p", "elements", "domain", "gas", "boundary", "flux", "beta0",
                     "beta_interface", "initial", "integrator", "steady_tol", "budget_tol", "grids", "degrees",
                     "output", "seed"});
  if (j.contains("case")) {
    std::string name;
    read(j, "case", name, "");
    if (name != c.case_name) {
      // Switching case restarts from that case's defaults.
      c = default_config(name);
    }
  }
  if (j.contains("model")) {
    std::string m;
    read(j, "model", m, "");
    c.model = model_from_string(m);
  }
  read(j, "ndim", c.dim, "");
  read(j, "p", c.p, "");
  read_array(j, "elements", c.elements, "");
  if (j.contains("domain")) {
    const auto& d = j.at("domain");
    check_keys(d, "domain", {"lo", "hi"});
    read_array(d, "lo", c.lo, "domain");
    read_array(d, "hi", c.hi, "domain");
  }
  if (j.contains("gas")) {
    const auto& g = j.at("gas");
    check_keys(g, "gas", {"gamma", "R", "Re", "Ma", "alpha", "Pr"});
    read(g, "gamma", c.gamma, "gas");
    read(g, "R", c.R, "gas");
    read(g, "Re", c.Re, "gas");
    read(g, "Ma", c.Ma, "gas");
    read(g, "alpha", c.alpha, "gas");
    read(g, "Pr", c.Pr, "gas");
  }
  if (j.contains("boundary")) {
    const auto& b = j.at("boundary");
    check_keys(b, "boundary", {"x1-", "x1+", "x2-", "x2+", "x3-", "x3+"});
    for (std::size_t f = 0; f < 6; ++f) {
      if (b.contains(kFaceKeys[f])) read_boundary(b.at(kFaceKeys[f]), std::string("boundary.") + kFaceKeys[f], c.boundary[f]);
    }
  }
  if (j.contains("flux")) {
    std::string f;
    read(j, "flux", f, "");
    c.flux = flux_from_string(f);
  }
  read(j, "beta0", c.beta0, "");
  read(j, "beta_interface", c.beta_interface, "");
  if (j.contains("initial")) {
    const auto& ic = j.at("initial");
    check_keys(ic, "initial", {"kind", "rho", "u", "T", "amplitude", "width"});
    read(ic, "kind", c.initial.kind, "initial");
    read(ic, "rho", c.initial.rho, "initial");
    read_array(ic, "u", c.initial.u, "initial");
    read(ic, "T", c.initial.T, "initial");
    read(ic, "amplitude", c.initial.amplitude, "initial");
    read(ic, "width", c.initial.width, "initial");
  }
  if (j.contains("integrator")) {
    const auto& it = j.at("integrator");
    check_keys(it, "integrator", {"rtol", "atol", "dt_initial", "dt_max", "t_end", "max_steps", "adaptive",
                                  "pi_control", "safety", "min_factor", "max_factor"});
    auto& ic = c.integrator;
    read(it, "rtol", ic.rtol, "integrator");
    read(it, "atol", ic.atol, "integrator");
    read(it, "dt_initial", ic.dt_initial, "integrator");
    read_dt_max(it, ic.dt_max);
    read(it, "t_end", ic.t_end, "integrator");
    read(it, "max_steps", ic.max_steps, "integrator");
    read(it, "adaptive", ic.adaptive, "integrator");
    read(it, "pi_control", ic.pi_control, "integrator");
    read(it, "safety", ic.safety, "integrator");
    read(it, "min_factor", ic.min_factor, "integrator");
    read(it, "max_factor", ic.max_factor, "integrator");
  }
  read(j, "steady_tol", c.steady_tol, "");
  read(j, "budget_tol", c.budget_tol, "");
  read(j, "grids", c.grids, "");
  read(j, "degrees", c.degrees, "");
  read(j, "output", c.output_dir, "");
  read(j, "seed", c.seed, "");
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string config_to_json(const RunConfig& c, int indent) {
  json j;
  j["case"] = c.case_name;
  j["model"] = to_string(c.model);
  j["ndim"] = c.dim;
  j["p"] = c.p;
  j["elements"] = c.elements;
  j["domain"] = {{"lo", c.lo}, {"hi", c.hi}};
  j["gas"] = {{"gamma", c.gamma}, {"R", c.R}, {"Re", c.Re}, {"Ma", c.Ma}, {"alpha", c.alpha}, {"Pr", c.Pr}};
  json b = json::object();
  for (std::size_t f = 0; f < 6; ++f) {
    const auto& s = c.boundary[f];
    b[kFaceKeys[f]] = {{"type", to_string(s.type)},
                       {"u_wall", s.u_wall},
                       {"T_wall", s.T_wall},
                       {"heat_flux", {{"kind", heat_kind_name(s.g.kind)}, {"value", s.g.value}, {"a", s.g.a}, {"omega", s.g.omega}}}};
  }
  j["boundary"] = b;
  j["flux"] = to_string(c.flux);
  j["beta0"] = c.beta0;
  j["beta_interface"] = c.beta_interface;
  j["initial"] = {{"kind", c.initial.kind}, {"rho", c.initial.rho}, {"u", c.initial.u}, {"T", c.initial.T},
                  {"amplitude", c.initial.amplitude}, {"width", c.initial.width}};
  const auto& ic = c.integrator;
  json it = {{"rtol", ic.rtol}, {"atol", ic.atol}, {"dt_initial", ic.dt_initial}, {"t_end", ic.t_end},
             {"max_steps", ic.max_steps}, {"adaptive", ic.adaptive}, {"pi_control", ic.pi_control},
             {"safety", ic.safety}, {"min_factor", ic.min_factor}, {"max_factor", ic.max_factor}};
  it["dt_max"] = std::isfinite(ic.dt_max) ? json(ic.dt_max) : json(nullptr);
  j["integrator"] = it;
  j["steady_tol"] = c.steady_tol;
  j["budget_tol"] = c.budget_tol;
  j["grids"] = c.grids;
  j["degrees"] = c.degrees;
  j["output"] = c.output_dir;
  j["seed"] = c.seed;
  return j.dump(indent);
}

GridConfig grid_config(const RunConfig& c) {
  GridConfig g;
  g.dim = c.dim;
  g.p = c.p;
  g.elements = c.elements;
  g.lo = c.lo;
  g.hi = c.hi;
  g.boundary = c.boundary;
  for (int d = c.dim; d < 3; ++d) {
    g.elements[static_cast<std::size_t>(d)] = 1;
    g.boundary[static_cast<std::size_t>(2 * d)] = g.boundary[static_cast<std::size_t>(2 * d + 1)] = BoundarySpec{};
  }
  return g;
}

GasModel gas_model(const RunConfig& c) {
  if (c.model == Model::Cns && c.dim != 1) throw ConfigError("model cns requires ndim = 1");
  return GasModel::from_flow(c.gamma, c.R, c.Re, c.Ma, c.alpha, c.Pr);
}

}  // namespace esdg::cases
