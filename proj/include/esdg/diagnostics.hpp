#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "esdg/mesh.hpp"
#include "esdg/semidiscretization.hpp"

namespace esdg {

struct Norms {
  double L1 = 0.0;
  double L2 = 0.0;
  double Linf = 0.0;
};

/// Volume-normalised discrete norms of one scalar per node (P J weighted).
Norms discrete_norms(const Grid& grid, std::span<const double> error);

/// Norms of component `field` of a multi-component nodal difference a - b.
Norms discrete_norms(const Grid& grid, std::span<const double> a, std::span<const double> b, int nvar, int field);

/// P-hat weighted totals of each of the nvar components of q.
std::vector<double> conserved_totals(const Grid& grid, std::span<const double> q, int nvar);

struct EntropyBudget {
  double dSdt = 0.0;
  double DT = 0.0;
  double Xi = 0.0;
  double boundary_data = 0.0;
  double source = 0.0;
  double ip = 0.0;
  double residual = 0.0;  // dSdt + DT - Xi - source
  double scale = 1.0;     // max(1, |dSdt|, |DT|, |Xi|)

  double relative_residual() const { return std::abs(residual) / scale; }
};

/// Evaluates the rhs at q and assembles the semidiscrete entropy budget.
/// dqdt receives the rhs.
template <int Dim>
EntropyBudget entropy_budget(const Semidiscretization<Dim>& semi, std::span<const double> q, double t,
                             std::span<double> dqdt, RhsRecord* record_out = nullptr) {
  RhsRecord rec;
  semi.rhs(q, t, dqdt, &rec);
  const auto& w = semi.entropy_variables();
  const Grid& grid = semi.grid();
  constexpr int nv = Dim + 2;
  double dsdt = 0.0;
  for (int e = 0; e < grid.num_elements(); ++e) {
    for (int k = 0; k < grid.nodes_per_element(); ++k) {
      const std::size_t a = (static_cast<std::size_t>(e) * static_cast<std::size_t>(grid.nodes_per_element()) +
                             static_cast<std::size_t>(k)) * nv;
      double local = 0.0;
      for (int c = 0; c < nv; ++c) local += w[a + static_cast<std::size_t>(c)] * dqdt[a + static_cast<std::size_t>(c)];
      dsdt += semi.node_weight(k) * local;
    }
  }
  EntropyBudget b;
  b.dSdt = dsdt;
  b.DT = rec.dissipation;
  b.Xi = rec.xi;
  b.boundary_data = rec.boundary_data;
  b.source = rec.source;
  b.ip = rec.ip;
  b.residual = b.dSdt + b.DT - b.Xi - b.source;
  b.scale = std::max({1.0, std::abs(b.dSdt), std::abs(b.DT), std::abs(b.Xi), std::abs(b.source)});
  if (record_out) *record_out = rec;
  return b;
}

/// P-hat weighted total of the mathematical entropy S = -rho s.
template <int Dim>
double total_entropy(const Semidiscretization<Dim>& semi, std::span<const double> q) {
  const Grid& grid = semi.grid();
  constexpr int nv = Dim + 2;
  double total = 0.0;
  for (int e = 0; e < grid.num_elements(); ++e) {
    for (int k = 0; k < grid.nodes_per_element(); ++k) {
      const std::size_t a = (static_cast<std::size_t>(e) * static_cast<std::size_t>(grid.nodes_per_element()) +
                             static_cast<std::size_t>(k)) * nv;
      ConsState<Dim> cs;
      for (int c = 0; c < nv; ++c) cs.c[static_cast<std::size_t>(c)] = q[a + static_cast<std::size_t>(c)];
      total += semi.node_weight(k) * entropy_scalars(semi.gas(), cons_to_prim(semi.gas(), cs)).S;
    }
  }
  return total;
}

}  // namespace esdg
