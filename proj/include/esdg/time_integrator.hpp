#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace esdg {

struct IntegratorConfig {
  double rtol = 1e-8;
  double atol = 1e-8;
  double dt_initial = 0.0;  // 0 selects a starting step automatically
  double dt_max = std::numeric_limits<double>::infinity();
  double t_start = 0.0;
  double t_end = 1.0;
  double safety = 0.9;
  double min_factor = 0.2;
  double max_factor = 5.0;
  long max_steps = 100000000;  // accepted steps
  bool adaptive = true;        // false: fixed steps of dt_initial
  bool pi_control = true;      // proportional-integral step control after the first step
};

struct StepInfo {
  long step = 0;  // accepted step count after this attempt
  double t = 0.0;   // time at the end of the attempt
  double dt = 0.0;
  bool accepted = false;
  double error = 0.0;  // weighted RMS error estimate
};

using OdeRhs = std::function<void(std::span<const double> y, double t, std::span<double> dydt)>;
/// Called after each accepted step with the new state; returning false stops
/// the integration.
using StepObserver = std::function<bool(const StepInfo& info, std::span<const double> y)>;

struct IntegrationResult {
  double t = 0.0;
  long accepted = 0;
  long rejected = 0;
  bool stopped = false;  // observer requested stop
  std::vector<StepInfo> log;
};

/// Bogacki-Shampine 3(2) embedded pair with FSAL and weighted-RMS error
/// control.  y is advanced in place.
IntegrationResult integrate(const OdeRhs& f, std::vector<double>& y, const IntegratorConfig& cfg,
                            const StepObserver& observer = {});

/// Weighted RMS norm with weights atol + rtol max(|a_i|, |b_i|).
double weighted_rms(std::span<const double> e, std::span<const double> a, std::span<const double> b,
                    double atol, double rtol);

}  // namespace esdg
