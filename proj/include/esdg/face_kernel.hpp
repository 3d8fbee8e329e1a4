#pragma once

#include <string>

#include "esdg/cns1d.hpp"
#include "esdg/flux.hpp"
#include "esdg/gas.hpp"

namespace esdg {

enum class Model { Eulerian, Cns };

inline const char* to_string(Model m) { return m == Model::Eulerian ? "eulerian" : "cns"; }

inline Model model_from_string(const std::string& s) {
  if (s == "eulerian") return Model::Eulerian;
  if (s == "cns" || s == "cns1d") return Model::Cns;
  throw ConfigError("unknown model '" + s + "'");
}

template <int Dim>
Mat<Dim> viscous_matrix(Model model, const GasModel& g, const PrimState<Dim>& v) {
  return model == Model::Eulerian ? eulerian_viscous_matrix(g, v) : cns_viscous_matrix(g, v);
}

/// Everything the face kernel needs to know about one side of a face node.
template <int Dim>
struct FaceSide {
  PrimState<Dim> v;
  Vars<Dim> w{};
  Vars<Dim> sigma{};  // normal viscous flux C Theta_n
  Mat<Dim> C{};
};

template <int Dim>
struct FacePenalties {
  Vars<Dim> inviscid{};
  Vars<Dim> viscous{};
  Vars<Dim> ip{};
};

/// Gradient penalty 1/2 s (w_rem - w); side s = +1 on the high face.
template <std::size_t N>
std::array<double, N> theta_penalty(int side, const std::array<double, N>& w, const std::array<double, N>& w_rem) {
  std::array<double, N> out{};
  const double hs = 0.5 * side;
  for (std::size_t k = 0; k < N; ++k) out[k] = hs * (w_rem[k] - w[k]);
  return out;
}

/// Common interface coupling, shared by interior faces and walls.
/// The inviscid remote state sets f*, ordered (low element, high element);
/// the viscous remote side supplies w, sigma and C for BR1 and IP terms.
template <int Dim>
FacePenalties<Dim> face_penalties(int side, int dir, InterfaceFlux kind, const GasModel& g,
                                  const FaceSide<Dim>& local, const Vars<Dim>& f_local,
                                  const PrimState<Dim>& inviscid_remote,
                                  const FaceSide<Dim>& viscous_remote, double beta, bool viscous) {
  FacePenalties<Dim> out;
  const Vars<Dim> fstar = side > 0 ? two_point_flux(kind, g, local.v, inviscid_remote, dir)
                                   : two_point_flux(kind, g, inviscid_remote, local.v, dir);
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.inviscid[k] = -side * (fstar[k] - f_local[k]);
  }
  if (!viscous) return out;
  const double hs = 0.5 * side;
  for (int i = 0; i < Dim + 2; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.viscous[k] = hs * (viscous_remote.sigma[k] - local.sigma[k]);
  }
  if (beta > 0.0) {
    Vars<Dim> dw{};
    for (int i = 0; i < Dim + 2; ++i) {
      const auto k = static_cast<std::size_t>(i);
      dw[k] = local.w[k] - viscous_remote.w[k];
    }
    for (int i = 0; i < Dim + 2; ++i) {
      const auto r = static_cast<std::size_t>(i);
      double acc = 0.0;
      for (int j = 0; j < Dim + 2; ++j) {
        const auto c = static_cast<std::size_t>(j);
        acc += (local.C[r][c] + viscous_remote.C[r][c]) * dw[c];
      }
      out.ip[r] = -beta * 0.5 * acc;
    }
  }
  return out;
}

}  // namespace esdg
