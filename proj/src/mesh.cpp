#include "esdg/mesh.hpp"

namespace esdg {

const char* to_string(BoundaryType t) {
  switch (t) {
    case BoundaryType::Periodic: return "periodic";
    case BoundaryType::AdiabaticWall: return "adiabatic_wall";
    case BoundaryType::IsothermalWall: return "isothermal_wall";
    case BoundaryType::HeatfluxWall: return "heatflux_wall";
  }
  return "unknown";
}

BoundaryType boundary_type_from_string(const std::string& s) {
  if (s == "periodic") return BoundaryType::Periodic;
  if (s == "adiabatic_wall") return BoundaryType::AdiabaticWall;
  if (s == "isothermal_wall") return BoundaryType::IsothermalWall;
  if (s == "heatflux_wall") return BoundaryType::HeatfluxWall;
  throw ConfigError("unknown boundary type '" + s + "'");
}

Grid::Grid(const GridConfig& cfg)
    : dim_(cfg.dim), p_(cfg.p), op_(&sbp_operators(cfg.p)), map_(cfg.dim, cfg.p + 1) {
  if (dim_ < 1 || dim_ > 3) throw ConfigError("ndim must be 1, 2 or 3");
  num_elements_ = 1;
  jac_ = 1.0;
  volume_ = 1.0;
  for (int d = 0; d < dim_; ++d) {
    const auto k = static_cast<std::size_t>(d);
    if (cfg.elements[k] < 1) throw ConfigError("element count must be positive in direction " + std::to_string(d));
    if (!(cfg.hi[k] > cfg.lo[k])) throw ConfigError("domain extent must be positive in direction " + std::to_string(d));
    elements_[k] = cfg.elements[k];
    lo_[k] = cfg.lo[k];
    hi_[k] = cfg.hi[k];
    h_[k] = (cfg.hi[k] - cfg.lo[k]) / cfg.elements[k];
    num_elements_ *= cfg.elements[k];
    jac_ *= 0.5 * h_[k];
    volume_ *= cfg.hi[k] - cfg.lo[k];
    const bool lo_periodic = cfg.boundary[2 * k].type == BoundaryType::Periodic;
    const bool hi_periodic = cfg.boundary[2 * k + 1].type == BoundaryType::Periodic;
    if (lo_periodic != hi_periodic) {
      throw ConfigError("periodic boundary in direction " + std::to_string(d) + " must be paired");
    }
  }
  boundary_ = cfg.boundary;
}

std::array<int, 3> Grid::element_ijk(int e) const {
  return {e % elements_[0], (e / elements_[0]) % elements_[1], e / (elements_[0] * elements_[1])};
}

int Grid::element_index(std::array<int, 3> ijk) const {
  return ijk[0] + elements_[0] * (ijk[1] + elements_[1] * ijk[2]);
}

FaceLink Grid::neighbor(int e, int d, int side) const {
  auto ijk = element_ijk(e);
  const auto k = static_cast<std::size_t>(d);
  const int face = 2 * d + (side > 0 ? 1 : 0);
  int next = ijk[k] + (side > 0 ? 1 : -1);
  if (next < 0 || next >= elements_[k]) {
    if (boundary_[static_cast<std::size_t>(face)].type != BoundaryType::Periodic) return {-1, face};
    next = (next + elements_[k]) % elements_[k];
  }
  ijk[k] = next;
  return {element_index(ijk), -1};
}

std::array<double, 3> Grid::node_coords(int e, int node) const {
  const auto eijk = element_ijk(e);
  const auto nijk = map_.ijk(node);
  std::array<double, 3> x{};
  for (int d = 0; d < dim_; ++d) {
    const auto k = static_cast<std::size_t>(d);
    const double xi = op_->nodes[static_cast<std::size_t>(nijk[k])];
    x[k] = lo_[k] + h_[k] * (eijk[k] + 0.5 * (xi + 1.0));
  }
  return x;
}

int Grid::count_boundary_faces() const {
  int count = 0;
  for (int e = 0; e < num_elements_; ++e)
    for (int d = 0; d < dim_; ++d)
      for (int side : {-1, 1})
        if (neighbor(e, d, side).is_boundary()) ++count;
  return count;
}

int Grid::count_interior_face_pairs() const {
  int count = 0;
  for (int e = 0; e < num_elements_; ++e)
    for (int d = 0; d < dim_; ++d)
      if (!neighbor(e, d, 1).is_boundary()) ++count;
  return count;
}

}  // namespace esdg
