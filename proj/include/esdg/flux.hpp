#pragma once

#include <algorithm>
#include <cmath>

#include "esdg/gas.hpp"

namespace esdg {

/// Logarithmic mean (a - b) / (ln a - ln b).  Written through
/// f = (a - b)/(a + b) so that ln(a/b) = 2 atanh f; a truncated series is
/// used for nearly equal arguments.
inline double logmean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error("logmean requires positive arguments");
  const double f = (a - b) / (a + b);
  if (std::abs(f) < 1e-4) {
    const double u = f * f;
    return 0.5 * (a + b) / (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0))));
  }
  return 0.5 * (a + b) * f / std::atanh(f);
}

template <int Dim>
Vars<Dim> inviscid_flux(const GasModel& g, const PrimState<Dim>& v, int n) {
  require_physical(v);
  const double p = pressure(g, v.rho, v.T);
  const double un = v.u[static_cast<std::size_t>(n)];
  Vars<Dim> f{};
  f[0] = v.rho * un;
  for (int i = 0; i < Dim; ++i) f[static_cast<std::size_t>(i + 1)] = f[0] * v.u[static_cast<std::size_t>(i)];
  f[static_cast<std::size_t>(n + 1)] += p;
  const double rhoE = v.rho * (g.cv * v.T + 0.5 * speed2(v));
  f[Dim + 1] = (rhoE + p) * un;
  return f;
}

/// Entropy potential w^T f_n - F_n in direction n.
template <int Dim>
inline double entropy_potential(const GasModel& g, const PrimState<Dim>& v, int n) {
  return g.R * v.rho * v.u[static_cast<std::size_t>(n)];
}

/// Kinetic-energy preserving entropy-conservative flux of Chandrashekar type.
template <int Dim>
Vars<Dim> ec_two_point_flux(const GasModel& g, const PrimState<Dim>& L, const PrimState<Dim>& R, int n) {
  require_physical(L);
  require_physical(R);
  const double betaL = 0.5 / (g.R * L.T);
  const double betaR = 0.5 / (g.R * R.T);
  const double rho_ln = logmean(L.rho, R.rho);
  const double beta_ln = logmean(betaL, betaR);
  const double p_hat = 0.5 * (L.rho + R.rho) / (2.0 * 0.5 * (betaL + betaR));
  Vec<Dim> u_avg{};
  for (int i = 0; i < Dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    u_avg[k] = 0.5 * (L.u[k] + R.u[k]);
  }
  Vars<Dim> f{};
  f[0] = rho_ln * u_avg[static_cast<std::size_t>(n)];
  double u_dot_fm = 0.0;
  for (int i = 0; i < Dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    double fm = u_avg[k] * f[0];
    if (i == n) fm += p_hat;
    f[k + 1] = fm;
    u_dot_fm += u_avg[k] * fm;
  }
  const double u2_avg = 0.5 * (speed2(L) + speed2(R));
  f[Dim + 1] = (1.0 / (2.0 * (g.gamma - 1.0) * beta_ln) - 0.5 * u2_avg) * f[0] + u_dot_fm;
  return f;
}

template <int Dim>
PrimState<Dim> average_state(const PrimState<Dim>& L, const PrimState<Dim>& R) {
  PrimState<Dim> a;
  a.rho = 0.5 * (L.rho + R.rho);
  for (int i = 0; i < Dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    a.u[k] = 0.5 * (L.u[k] + R.u[k]);
  }
  a.T = 0.5 * (L.T + R.T);
  return a;
}

template <int Dim>
double max_wave_speed(const GasModel& g, const PrimState<Dim>& L, const PrimState<Dim>& R, int n) {
  const auto k = static_cast<std::size_t>(n);
  const PrimState<Dim> a = average_state(L, R);
  return std::max({std::abs(L.u[k]) + sound_speed(g, L), std::abs(R.u[k]) + sound_speed(g, R),
                   std::abs(a.u[k]) + sound_speed(g, a)});
}

/// EC flux with scalar dissipation lambda_max [dq/dw](v_avg) (w_R - w_L) / 2.
template <int Dim>
Vars<Dim> es_two_point_flux(const GasModel& g, const PrimState<Dim>& L, const PrimState<Dim>& R, int n) {
  Vars<Dim> f = ec_two_point_flux(g, L, R, n);
  const auto wL = entropy_vars(g, L).c;
  const auto wR = entropy_vars(g, R).c;
  Vars<Dim> dw{};
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    dw[k] = wR[k] - wL[k];
  }
  const double lambda = max_wave_speed(g, L, R, n);
  const auto diss = matvec(dqdw(g, average_state(L, R)), dw);
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    f[k] -= 0.5 * lambda * diss[k];
  }
  return f;
}

enum class InterfaceFlux { EntropyConservative, EntropyStable };

inline const char* to_string(InterfaceFlux f) {
  return f == InterfaceFlux::EntropyConservative ? "entropy_conservative" : "entropy_stable";
}

template <int Dim>
Vars<Dim> two_point_flux(InterfaceFlux kind, const GasModel& g, const PrimState<Dim>& L,
                         const PrimState<Dim>& R, int n) {
  return kind == InterfaceFlux::EntropyConservative ? ec_two_point_flux(g, L, R, n)
                                                    : es_two_point_flux(g, L, R, n);
}

/// Eulerian diffusion coefficient matrix nu [dq/dw].
template <int Dim>
Mat<Dim> eulerian_viscous_matrix(const GasModel& g, const PrimState<Dim>& v) {
  Mat<Dim> m = dqdw(g, v);
  const double nu = g.nu(v.rho);
  for (auto& row : m)
    for (double& x : row) x *= nu;
  return m;
}

/// nu dq/dx_n for the Eulerian model, from the conservative gradient.
template <int Dim>
Vars<Dim> viscous_flux_eulerian(const GasModel& g, const ConsState<Dim>& q, const Vars<Dim>& grad_q) {
  const double rho = q.c[0];
  if (!(rho > 0.0)) throw NonphysicalState("nonpositive density", "rho", rho);
  const double nu = g.nu(rho);
  Vars<Dim> f{};
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    f[k] = nu * grad_q[k];
  }
  return f;
}

}  // namespace esdg
