#include "esdg/time_integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "esdg/error.hpp"

namespace esdg {

double weighted_rms(std::span<const double> e, std::span<const double> a, std::span<const double> b,
                    double atol, double rtol) {
  if (e.empty()) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double sc = atol + rtol * std::max(std::abs(a[i]), std::abs(b[i]));
    const double r = e[i] / sc;
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(e.size()));
}

namespace {

void validate(const IntegratorConfig& cfg) {
  if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0)) throw ConfigError("integrator tolerances must be positive");
  if (!(cfg.t_end > cfg.t_start)) throw ConfigError("t_end must exceed t_start");
  if (!(cfg.dt_max > 0.0)) throw ConfigError("dt_max must be positive");
  if (cfg.dt_initial < 0.0) throw ConfigError("dt_initial must be nonnegative");
  if (!cfg.adaptive && !(cfg.dt_initial > 0.0)) throw ConfigError("fixed-step mode needs dt_initial > 0");
}

double starting_step(const OdeRhs& f, std::span<const double> y0, std::span<const double> f0,
                     const IntegratorConfig& cfg, double span) {
  const double dmax = std::min(cfg.dt_max, span);
  bool zero = true;
  for (double v : f0) {
    if (v != 0.0) {
      zero = false;
      break;
    }
  }
  if (zero) return dmax;
  const double d0 = weighted_rms(y0, y0, y0, cfg.atol, cfg.rtol);
  const double d1 = weighted_rms(f0, y0, y0, cfg.atol, cfg.rtol);
  const double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 * span : 0.01 * d0 / d1;
  std::vector<double> y1(y0.size()), f1(y0.size()), df(y0.size());
  for (std::size_t i = 0; i < y0.size(); ++i) y1[i] = y0[i] + h0 * f0[i];
  f(y1, cfg.t_start + h0, f1);
  for (std::size_t i = 0; i < y0.size(); ++i) df[i] = f1[i] - f0[i];
  const double d2 = weighted_rms(df, y0, y0, cfg.atol, cfg.rtol) / h0;
  const double dd = std::max(d1, d2);
  const double h1 = dd <= 1e-15 ? std::max(1e-6 * span, h0 * 1e-3) : std::cbrt(0.01 / dd);
  return std::min({100.0 * h0, h1, dmax});
}

}  // namespace

IntegrationResult integrate(const OdeRhs& f, std::vector<double>& y, const IntegratorConfig& cfg,
                            const StepObserver& observer) {
  validate(cfg);
  const std::size_t n = y.size();
  const double span = cfg.t_end - cfg.t_start;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), stage(n), y1(n), err(n);

  IntegrationResult res;
  double t = cfg.t_start;
  f(y, t, k1);
  double h = cfg.dt_initial > 0.0 ? std::min(cfg.dt_initial, cfg.dt_max) : starting_step(f, y, k1, cfg, span);
  double last_error = 0.0;
  bool after_reject = false;
  double prev_error = 0.0;

  while (t < cfg.t_end && res.accepted < cfg.max_steps) {
    const bool final_step = t + h >= cfg.t_end * (1.0 - 1e-15) || cfg.t_end - (t + h) < 1e-12 * span;
    const double dt = final_step ? cfg.t_end - t : h;
    bool ok = true;
    try {
      for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + 0.5 * dt * k1[i];
      f(stage, t + 0.5 * dt, k2);
      for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + 0.75 * dt * k2[i];
      f(stage, t + 0.75 * dt, k3);
      for (std::size_t i = 0; i < n; ++i) {
        y1[i] = y[i] + dt * (2.0 / 9.0 * k1[i] + 1.0 / 3.0 * k2[i] + 4.0 / 9.0 * k3[i]);
      }
      f(y1, t + dt, k4);
    } catch (const NonphysicalState&) {
      if (!cfg.adaptive) throw;
      ok = false;
    }

    double enorm = 0.0;
    if (ok && cfg.adaptive) {
      for (std::size_t i = 0; i < n; ++i) {
        err[i] = dt * (-5.0 / 72.0 * k1[i] + 1.0 / 12.0 * k2[i] + 1.0 / 9.0 * k3[i] - 1.0 / 8.0 * k4[i]);
      }
      enorm = weighted_rms(err, y, y1, cfg.atol, cfg.rtol);
      if (!std::isfinite(enorm)) ok = false;
    }

    StepInfo info;
    info.dt = dt;
    info.error = enorm;
    if (ok && enorm <= 1.0) {
      t = final_step ? cfg.t_end : t + dt;
      y.swap(y1);
      k1.swap(k4);
      ++res.accepted;
      info.accepted = true;
      info.step = res.accepted;
      info.t = t;
      res.log.push_back(info);
      last_error = enorm;
      after_reject = false;
      if (observer && !observer(info, y)) {
        res.stopped = true;
        break;
      }
      if (cfg.adaptive) {
        double fac = cfg.max_factor;
        if (enorm > 0.0) {
          fac = cfg.pi_control && prev_error > 0.0
                    ? cfg.safety * std::pow(enorm, -0.7 / 3.0) * std::pow(prev_error, 0.4 / 3.0)
                    : cfg.safety * std::pow(enorm, -1.0 / 3.0);
        }
        prev_error = std::max(enorm, 1e-4);
        // No growth directly after a rejection.
        const double grow = after_reject ? 1.0 : cfg.max_factor;
        h = std::min(dt * std::clamp(fac, cfg.min_factor, grow), cfg.dt_max);
        if (final_step) h = std::max(h, dt);
      }
    } else {
      ++res.rejected;
      after_reject = true;
      info.accepted = false;
      info.step = res.accepted;
      info.t = t + dt;
      res.log.push_back(info);
      const double fac = ok ? cfg.safety * std::pow(enorm, -1.0 / 3.0) : 0.25;
      h = dt * std::clamp(fac, cfg.min_factor, 0.5);
      if (h < 1e-14 * span) {
        std::ostringstream os;
        os << "step size underflow at t = " << t << " (dt = " << h << ", last accepted error " << last_error
           << (ok ? ")" : ", stage state nonphysical)");
        throw IntegrationFailure(os.str());
      }
    }
  }
  res.t = t;
  return res;
}

}  // namespace esdg
