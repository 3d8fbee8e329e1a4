#pragma once

#include "esdg/face_kernel.hpp"
#include "esdg/mesh.hpp"

namespace esdg {

/// Ghost state for the inviscid no-penetration condition: normal velocity
/// negated, everything else copied.
template <int Dim>
PrimState<Dim> mirror_inviscid(const PrimState<Dim>& v, int n) {
  PrimState<Dim> m = v;
  m.u[static_cast<std::size_t>(n)] = -v.u[static_cast<std::size_t>(n)];
  return m;
}

/// Ghost state for the no-slip condition: velocity reflected about U_wall.
/// Isothermal walls additionally reflect T about T_wall.
template <int Dim>
PrimState<Dim> mirror_viscous(const PrimState<Dim>& v, const BoundarySpec& wall) {
  PrimState<Dim> m = v;
  for (int i = 0; i < Dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    m.u[k] = 2.0 * wall.u_wall[k] - v.u[k];
  }
  if (wall.type == BoundaryType::IsothermalWall) m.T = 2.0 * wall.T_wall - v.T;
  return m;
}

/// Sign pattern applied to the primitive normal gradient (rho, U, T) when
/// building the ghost gradient.  Eulerian heat-flux walls flip the density
/// and temperature rows, the classical model only the temperature row.
template <int Dim>
Vars<Dim> gradient_flip(Model model, BoundaryType type) {
  Vars<Dim> s;
  s.fill(1.0);
  const bool isothermal = type == BoundaryType::IsothermalWall;
  if (model == Model::Eulerian) s[0] = -1.0;
  if (!isothermal) s[Dim + 1] = -1.0;
  return s;
}

/// Theta_tilde = dw/dv(v_ghost) diag(flip) Pi with Pi the primitive normal
/// gradient at the wall node.
template <int Dim>
Vars<Dim> manufactured_theta(Model model, const GasModel& g, const PrimState<Dim>& ghost,
                             BoundaryType type, const Vars<Dim>& pi) {
  const Vars<Dim> flip = gradient_flip<Dim>(model, type);
  Vars<Dim> fp{};
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    fp[k] = flip[k] * pi[k];
  }
  return matvec(dwdv(g, ghost), fp);
}

/// Source that imposes the heat entropy flux g(t), scaled by T so that its
/// entropy production w^T L equals g exactly.
template <int Dim>
Vars<Dim> heat_source(const BoundarySpec& wall, double T, double t) {
  Vars<Dim> L{};
  if (wall.type == BoundaryType::HeatfluxWall) L[Dim + 1] = -T * wall.g(t);
  return L;
}

template <int Dim>
struct WallFaceResult {
  PrimState<Dim> v_inviscid;   // mirror state fed to f*
  PrimState<Dim> v_viscous;    // no-slip ghost
  Vars<Dim> w_ghost{};
  Vars<Dim> theta_tilde{};
  Vars<Dim> f_ghost{};         // manufactured viscous flux C(v_ghost) theta_tilde
  Vars<Dim> g_inviscid{};
  Vars<Dim> g_viscous_q{};
  Vars<Dim> g_viscous_theta{};
  Vars<Dim> M{};
  Vars<Dim> L{};
};

/// Viscous ghost side of a wall node given the lifted normal gradient theta_n
/// of the interior node.
template <int Dim>
FaceSide<Dim> wall_ghost_side(Model model, const GasModel& g, const BoundarySpec& wall,
                              const PrimState<Dim>& v, const Vars<Dim>& theta_n, bool viscous) {
  FaceSide<Dim> ghost;
  ghost.v = mirror_viscous(v, wall);
  ghost.w = entropy_vars(g, ghost.v).c;
  if (viscous) {
    ghost.C = viscous_matrix(model, g, ghost.v);
    const Vars<Dim> tt = manufactured_theta(model, g, ghost.v, wall.type, prim_gradient(g, v, theta_n));
    ghost.sigma = matvec(ghost.C, tt);
  }
  return ghost;
}

/// All wall penalties at one face node, routed through the interface kernel.
template <int Dim>
WallFaceResult<Dim> wall_face(int side, int dir, InterfaceFlux kind, Model model, const GasModel& g,
                              const BoundarySpec& wall, const FaceSide<Dim>& local,
                              const Vars<Dim>& f_local, const Vars<Dim>& theta_n, double beta_ip,
                              double t, bool viscous) {
  WallFaceResult<Dim> r;
  r.v_inviscid = mirror_inviscid(local.v, dir);
  const FaceSide<Dim> ghost = wall_ghost_side(model, g, wall, local.v, theta_n, viscous);
  r.v_viscous = ghost.v;
  r.w_ghost = ghost.w;
  r.f_ghost = ghost.sigma;
  if (viscous) {
    r.theta_tilde = manufactured_theta(model, g, ghost.v, wall.type, prim_gradient(g, local.v, theta_n));
    r.g_viscous_theta = theta_penalty(side, local.w, ghost.w);
  }
  const auto pen = face_penalties(side, dir, kind, g, local, f_local, r.v_inviscid, ghost, beta_ip, viscous);
  r.g_inviscid = pen.inviscid;
  r.g_viscous_q = pen.viscous;
  r.M = pen.ip;
  if (viscous) r.L = heat_source<Dim>(wall, local.v.T, t);
  return r;
}

// Stand-alone forms of the individual wall terms, written out directly.

template <int Dim>
Vars<Dim> inviscid_wall_penalty(int side, int dir, InterfaceFlux kind, const GasModel& g,
                                const PrimState<Dim>& v) {
  const PrimState<Dim> m = mirror_inviscid(v, dir);
  const Vars<Dim> f = inviscid_flux(g, v, dir);
  const Vars<Dim> fs = side > 0 ? two_point_flux(kind, g, v, m, dir) : two_point_flux(kind, g, m, v, dir);
  Vars<Dim> out{};
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = -side * (fs[k] - f[k]);
  }
  return out;
}

template <int Dim>
struct ViscousWallPenalties {
  Vars<Dim> q{};
  Vars<Dim> theta{};
};

template <int Dim>
ViscousWallPenalties<Dim> viscous_wall_penalties(int side, Model model, const GasModel& g,
                                                 const BoundarySpec& wall, const PrimState<Dim>& v,
                                                 const Vars<Dim>& theta_n) {
  const PrimState<Dim> ghost = mirror_viscous(v, wall);
  const Vars<Dim> tt = manufactured_theta(model, g, ghost, wall.type, prim_gradient(g, v, theta_n));
  const Vars<Dim> f_ghost = matvec(viscous_matrix(model, g, ghost), tt);
  const Vars<Dim> sigma = matvec(viscous_matrix(model, g, v), theta_n);
  const Vars<Dim> w = entropy_vars(g, v).c;
  const Vars<Dim> wg = entropy_vars(g, ghost).c;
  ViscousWallPenalties<Dim> out;
  const double hs = 0.5 * side;
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.q[k] = hs * (f_ghost[k] - sigma[k]);
    out.theta[k] = hs * (wg[k] - w[k]);
  }
  return out;
}

/// Interior-penalty term -beta 1/2 (C(v) + C(v_ghost)) (w - w_ghost).
template <int Dim>
Vars<Dim> ip_term(Model model, const GasModel& g, const BoundarySpec& wall, const PrimState<Dim>& v,
                  double beta_ip) {
  const PrimState<Dim> ghost = mirror_viscous(v, wall);
  const Vars<Dim> w = entropy_vars(g, v).c;
  const Vars<Dim> wg = entropy_vars(g, ghost).c;
  Vars<Dim> dw{};
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    dw[k] = w[k] - wg[k];
  }
  const Mat<Dim> C = viscous_matrix(model, g, v);
  const Mat<Dim> Cg = viscous_matrix(model, g, ghost);
  Vars<Dim> out{};
  for (int i = 0; i < Dim + 2; ++i) {
    const auto r = static_cast<std::size_t>(i);
    double acc = 0.0;
    for (int j = 0; j < Dim + 2; ++j) {
      const auto c = static_cast<std::size_t>(j);
      acc += (C[r][c] + Cg[r][c]) * dw[c];
    }
    out[r] = -beta_ip * 0.5 * acc;
  }
  return out;
}

}  // namespace esdg
