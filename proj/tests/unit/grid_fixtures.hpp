#pragma once

#include <random>
#include <vector>

#include "esdg/mesh.hpp"
#include "esdg/semidiscretization.hpp"

namespace esdg::testing {

inline BoundarySpec make_boundary(BoundaryType type, std::array<double, 3> u_wall = {}, double g_value = 0.0) {
  BoundarySpec b;
  b.type = type;
  b.u_wall = u_wall;
  if (type == BoundaryType::HeatfluxWall) {
    b.g.kind = HeatFlux::Kind::Constant;
    b.g.value = g_value;
  }
  return b;
}

/// Unit box with `type` on every face normal to the directions listed as
/// walled and periodic elsewhere.
inline GridConfig box_config(int dim, int p, int elements, BoundaryType wall_type, bool all_walls,
                             std::array<double, 3> lid_velocity = {}) {
  GridConfig cfg;
  cfg.dim = dim;
  cfg.p = p;
  for (int d = 0; d < 3; ++d) {
    cfg.elements[static_cast<std::size_t>(d)] = d < dim ? elements : 1;
    cfg.lo[static_cast<std::size_t>(d)] = 0.0;
    cfg.hi[static_cast<std::size_t>(d)] = 1.0;
  }
  for (int d = 0; d < dim; ++d) {
    const bool walled = wall_type != BoundaryType::Periodic && (all_walls || d == dim - 1);
    for (int s = 0; s < 2; ++s) {
      cfg.boundary[static_cast<std::size_t>(2 * d + s)] =
          walled ? make_boundary(wall_type, {}, 1e-3 * (1 + s + d)) : make_boundary(BoundaryType::Periodic);
    }
  }
  if (wall_type != BoundaryType::Periodic) cfg.boundary[static_cast<std::size_t>(2 * (dim - 1) + 1)].u_wall = lid_velocity;
  return cfg;
}

/// Random physical nodal state, independent at every node.
template <int Dim>
std::vector<double> random_field(const Grid& grid, const GasModel& gas, std::mt19937_64& rng, double amp = 0.5) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto q = project_function<Dim>(grid, gas, [&](const std::array<double, 3>&) {
    PrimState<Dim> v;
    v.rho = 1.0 + amp * u(rng);
    for (auto& ui : v.u) ui = amp * u(rng);
    v.T = 1.0 + amp * u(rng);
    return v;
  });
  return q.vec();
}

}  // namespace esdg::testing
