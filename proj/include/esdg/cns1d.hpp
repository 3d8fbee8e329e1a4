#pragma once

#include "esdg/gas.hpp"

namespace esdg {

/// Symmetric coefficient matrix C with f_visc = C dw/dx for the 1D classical
/// Navier-Stokes stress (4/3 mu U_x) and Fourier heat flux (kappa T_x).
template <int Dim>
Mat<Dim> cns_viscous_matrix(const GasModel& g, const PrimState<Dim>& v) {
  if constexpr (Dim != 1) {
    throw ConfigError("classical Navier-Stokes model is implemented in one dimension only");
  } else {
    const double a = (4.0 / 3.0) * g.mu * v.T;
    const double u = v.u[0];
    Mat<1> m{};
    m[1][1] = a;
    m[1][2] = m[2][1] = a * u;
    m[2][2] = a * u * u + g.kappa * v.T * v.T;
    return m;
  }
}

/// Primitive-gradient form of the 1D viscous flux.
inline Vars<1> cns_viscous_flux(const GasModel& g, const PrimState<1>& v, double dudx, double dTdx) {
  require_physical(v);
  const double tau = (4.0 / 3.0) * g.mu * dudx;
  return {0.0, tau, tau * v.u[0] + g.kappa * dTdx};
}

}  // namespace esdg
