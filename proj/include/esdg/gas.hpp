#pragma once

#include <array>
#include <cmath>
#include <string>

#include "esdg/error.hpp"

namespace esdg {

template <int Dim>
inline constexpr int kVars = Dim + 2;

template <int Dim>
using Vars = std::array<double, Dim + 2>;

template <int Dim>
using Mat = std::array<std::array<double, Dim + 2>, Dim + 2>;

template <int Dim>
using Vec = std::array<double, Dim>;

/// Perfect-gas closure and transport coefficients, all nondimensional.
struct GasModel {
  double gamma = 1.4;
  double R = 1.0;
  double cv = 2.5;
  double cp = 3.5;
  double mu = 0.0;
  double alpha = 1.0;
  double beta_diff = 0.0;
  double Pr = 0.75;
  double kappa = 0.0;  // c_p mu / Pr, classical model only

  static GasModel make(double gamma, double R, double mu, double alpha = 1.0, double Pr = 0.75) {
    if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    if (!(R > 0.0)) throw ConfigError("gas constant must be positive");
    if (!(mu >= 0.0)) throw ConfigError("viscosity must be nonnegative");
    if (alpha < 1.0 || alpha > 4.0 / 3.0) throw ConfigError("alpha must lie in [1, 4/3]");
    if (!(Pr > 0.0)) throw ConfigError("Prandtl number must be positive");
    GasModel g;
    g.gamma = gamma;
    g.R = R;
    g.cv = R / (gamma - 1.0);
    g.cp = g.cv + R;
    g.mu = mu;
    g.alpha = alpha;
    g.Pr = Pr;
    g.kappa = g.cp * mu / Pr;
    return g;
  }

  /// Reference scales rho = T = 1, L = 1, c = sqrt(gamma R); U_ref = Ma c
  /// and mu = U_ref / Re.
  static GasModel from_flow(double gamma, double R, double Re, double Ma, double alpha = 1.0,
                            double Pr = 0.75) {
    if (!(Re > 0.0) || !(Ma > 0.0)) throw ConfigError("Re and Ma must be positive");
    return make(gamma, R, reference_speed(gamma, R, Ma) / Re, alpha, Pr);
  }

  static double reference_speed(double gamma, double R, double Ma) { return Ma * std::sqrt(gamma * R); }

  double nu(double rho) const { return alpha * mu / rho + beta_diff; }
};

template <int Dim>
struct PrimState {
  double rho = 1.0;
  Vec<Dim> u{};
  double T = 1.0;
};

template <int Dim>
struct ConsState {
  Vars<Dim> c{};  // rho, rho U_i, rho E
};

template <int Dim>
struct EntropyState {
  Vars<Dim> c{};
};

template <int Dim>
inline double speed2(const PrimState<Dim>& v) {
  double s = 0.0;
  for (double ui : v.u) s += ui * ui;
  return s;
}

template <int Dim>
inline bool is_physical(const PrimState<Dim>& v) {
  return v.rho > 0.0 && v.T > 0.0 && std::isfinite(v.rho) && std::isfinite(v.T);
}

template <int Dim>
inline void require_physical(const PrimState<Dim>& v) {
  if (!(v.rho > 0.0) || !std::isfinite(v.rho)) throw NonphysicalState("nonpositive density", "rho", v.rho);
  if (!(v.T > 0.0) || !std::isfinite(v.T)) throw NonphysicalState("nonpositive temperature", "T", v.T);
}

inline double pressure(const GasModel& g, double rho, double T) { return rho * g.R * T; }

template <int Dim>
inline double sound_speed(const GasModel& g, const PrimState<Dim>& v) {
  return std::sqrt(g.gamma * g.R * v.T);
}

template <int Dim>
ConsState<Dim> prim_to_cons(const GasModel& g, const PrimState<Dim>& v) {
  ConsState<Dim> q;
  q.c[0] = v.rho;
  for (int i = 0; i < Dim; ++i) q.c[static_cast<std::size_t>(i + 1)] = v.rho * v.u[static_cast<std::size_t>(i)];
  q.c[Dim + 1] = v.rho * (g.cv * v.T + 0.5 * speed2(v));
  return q;
}

template <int Dim>
PrimState<Dim> cons_to_prim(const GasModel& g, const ConsState<Dim>& q) {
  PrimState<Dim> v;
  v.rho = q.c[0];
  if (!(v.rho > 0.0) || !std::isfinite(v.rho)) throw NonphysicalState("nonpositive density", "rho", v.rho);
  const double inv = 1.0 / v.rho;
  double ke = 0.0;
  for (int i = 0; i < Dim; ++i) {
    const double ui = q.c[static_cast<std::size_t>(i + 1)] * inv;
    v.u[static_cast<std::size_t>(i)] = ui;
    ke += ui * ui;
  }
  v.T = (q.c[Dim + 1] * inv - 0.5 * ke) / g.cv;
  if (!(v.T > 0.0) || !std::isfinite(v.T)) throw NonphysicalState("nonpositive temperature", "T", v.T);
  return v;
}

template <int Dim>
struct EntropyScalars {
  double s = 0.0;    // specific thermodynamic entropy
  double S = 0.0;    // mathematical entropy -rho s
  Vec<Dim> F{};      // entropy flux -rho U_i s
  Vec<Dim> psi{};    // entropy potential R rho U_i
};

template <int Dim>
inline double specific_entropy(const GasModel& g, const PrimState<Dim>& v) {
  return g.cv * std::log(v.T) - g.R * std::log(v.rho);
}

template <int Dim>
EntropyScalars<Dim> entropy_scalars(const GasModel& g, const PrimState<Dim>& v) {
  require_physical(v);
  EntropyScalars<Dim> e;
  e.s = specific_entropy(g, v);
  e.S = -v.rho * e.s;
  for (int i = 0; i < Dim; ++i) {
    const double m = v.rho * v.u[static_cast<std::size_t>(i)];
    e.F[static_cast<std::size_t>(i)] = -m * e.s;
    e.psi[static_cast<std::size_t>(i)] = g.R * m;
  }
  return e;
}

/// w = dS/dq for S = -rho s.
template <int Dim>
EntropyState<Dim> entropy_vars(const GasModel& g, const PrimState<Dim>& v) {
  require_physical(v);
  EntropyState<Dim> w;
  const double invT = 1.0 / v.T;
  w.c[0] = g.cp - specific_entropy(g, v) - 0.5 * speed2(v) * invT;
  for (int i = 0; i < Dim; ++i) w.c[static_cast<std::size_t>(i + 1)] = v.u[static_cast<std::size_t>(i)] * invT;
  w.c[Dim + 1] = -invT;
  return w;
}

/// dq/dw as a function of the primitive state (symmetric positive definite).
template <int Dim>
Mat<Dim> dqdw(const GasModel& g, const PrimState<Dim>& v) {
  require_physical(v);
  constexpr int E = Dim + 1;
  const double rho = v.rho, T = v.T, R = g.R, cp = g.cp;
  const double u2 = speed2(v);
  Mat<Dim> m{};
  m[0][0] = rho / R;
  for (int i = 0; i < Dim; ++i) {
    const double ui = v.u[static_cast<std::size_t>(i)];
    m[0][i + 1] = m[i + 1][0] = ui * rho / R;
    for (int j = 0; j < Dim; ++j) {
      const double uj = v.u[static_cast<std::size_t>(j)];
      m[i + 1][j + 1] = ui * uj * rho / R + (i == j ? T * rho : 0.0);
    }
    m[i + 1][E] = m[E][i + 1] = ui * rho * (u2 + 2.0 * T * cp) / (2.0 * R);
  }
  m[0][E] = m[E][0] = rho * (-2.0 * R * T + u2 + 2.0 * T * cp) / (2.0 * R);
  m[E][E] = rho * (u2 * u2 + 4.0 * T * cp * (-R * T + u2 + T * cp)) / (4.0 * R);
  return m;
}

/// Jacobian of the entropy variables with respect to (rho, U_i, T).
template <int Dim>
Mat<Dim> dwdv(const GasModel& g, const PrimState<Dim>& v) {
  require_physical(v);
  constexpr int E = Dim + 1;
  const double invT = 1.0 / v.T;
  Mat<Dim> m{};
  m[0][0] = g.R / v.rho;
  for (int i = 0; i < Dim; ++i) {
    const double ui = v.u[static_cast<std::size_t>(i)];
    m[0][i + 1] = -ui * invT;
    m[i + 1][i + 1] = invT;
    m[i + 1][E] = -ui * invT * invT;
  }
  m[0][E] = -g.cv * invT + 0.5 * speed2(v) * invT * invT;
  m[E][E] = invT * invT;
  return m;
}

/// Jacobian of the conservative variables with respect to (rho, U_i, T).
template <int Dim>
Mat<Dim> dqdv(const GasModel& g, const PrimState<Dim>& v) {
  constexpr int E = Dim + 1;
  Mat<Dim> m{};
  m[0][0] = 1.0;
  for (int i = 0; i < Dim; ++i) {
    const double ui = v.u[static_cast<std::size_t>(i)];
    m[i + 1][0] = ui;
    m[i + 1][i + 1] = v.rho;
    m[E][i + 1] = v.rho * ui;
  }
  m[E][0] = g.cv * v.T + 0.5 * speed2(v);
  m[E][E] = v.rho * g.cv;
  return m;
}

/// Primitive-variable gradient (rho', U_i', T') consistent with an
/// entropy-variable gradient theta at state v; inverse action of dw/dv.
template <int Dim>
Vars<Dim> prim_gradient(const GasModel& g, const PrimState<Dim>& v, const Vars<Dim>& theta) {
  constexpr int E = Dim + 1;
  const double T = v.T;
  Vars<Dim> pi{};
  const double dT = T * T * theta[E];
  pi[E] = dT;
  double u_du = 0.0;
  for (int i = 0; i < Dim; ++i) {
    const double ui = v.u[static_cast<std::size_t>(i)];
    const double dui = T * theta[static_cast<std::size_t>(i + 1)] + ui * T * theta[E];
    pi[static_cast<std::size_t>(i + 1)] = dui;
    u_du += ui * dui;
  }
  pi[0] = (v.rho / g.R) * (theta[0] + g.cv * dT / T + u_du / T - 0.5 * speed2(v) * dT / (T * T));
  return pi;
}

template <std::size_t N>
inline std::array<double, N> matvec(const std::array<std::array<double, N>, N>& m, const std::array<double, N>& x) {
  std::array<double, N> y{};
  for (std::size_t i = 0; i < N; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < N; ++j) acc += m[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

template <std::size_t N>
inline double dot(const std::array<double, N>& a, const std::array<double, N>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace esdg
