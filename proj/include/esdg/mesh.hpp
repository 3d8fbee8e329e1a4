#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "esdg/error.hpp"
#include "esdg/gas.hpp"
#include "esdg/sbp.hpp"

namespace esdg {

enum class BoundaryType { Periodic, AdiabaticWall, IsothermalWall, HeatfluxWall };

const char* to_string(BoundaryType t);
BoundaryType boundary_type_from_string(const std::string& s);

/// Heat entropy flux g(t) prescribed on a wall.
struct HeatFlux {
  enum class Kind { Zero, Constant, Sinusoidal };
  Kind kind = Kind::Zero;
  double value = 0.0;
  double a = 0.0;
  double omega = 0.0;

  double operator()(double t) const {
    switch (kind) {
      case Kind::Constant: return value;
      case Kind::Sinusoidal: return a * std::sin(omega * t);
      case Kind::Zero: break;
    }
    return 0.0;
  }
};

struct BoundarySpec {
  BoundaryType type = BoundaryType::Periodic;
  std::array<double, 3> u_wall{};
  double T_wall = 1.0;
  HeatFlux g;

  bool is_wall() const { return type != BoundaryType::Periodic; }
};

struct GridConfig {
  int dim = 1;
  int p = 1;
  std::array<int, 3> elements{1, 1, 1};
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{1.0, 1.0, 1.0};
  /// Indexed 2 d + side, side 0 the low face.
  std::array<BoundarySpec, 6> boundary{};
};

/// Where an element face leads: another element (possibly itself) or a
/// domain boundary with index into Grid::boundary.
struct FaceLink {
  int element = -1;
  int boundary = -1;
  bool is_boundary() const { return element < 0; }
};

class Grid {
 public:
  explicit Grid(const GridConfig& cfg);

  int dim() const noexcept { return dim_; }
  int p() const noexcept { return p_; }
  int n() const noexcept { return p_ + 1; }
  int num_elements() const noexcept { return num_elements_; }
  int nodes_per_element() const noexcept { return map_.nodes(); }
  std::size_t num_nodes() const noexcept {
    return static_cast<std::size_t>(num_elements_) * static_cast<std::size_t>(map_.nodes());
  }
  int elements(int d) const { return elements_[static_cast<std::size_t>(d)]; }
  double h(int d) const { return h_[static_cast<std::size_t>(d)]; }
  double lo(int d) const { return lo_[static_cast<std::size_t>(d)]; }
  double hi(int d) const { return hi_[static_cast<std::size_t>(d)]; }
  /// Metric Jacobian, product of h_d / 2.
  double jacobian() const noexcept { return jac_; }
  double volume() const noexcept { return volume_; }

  const SbpOperators& op() const { return *op_; }
  const TensorIndexMap& map() const { return map_; }
  const BoundarySpec& boundary(int face) const { return boundary_[static_cast<std::size_t>(face)]; }

  std::array<int, 3> element_ijk(int e) const;
  int element_index(std::array<int, 3> ijk) const;
  /// Neighbour across face d of element e; side -1 low, +1 high.
  FaceLink neighbor(int e, int d, int side) const;
  std::array<double, 3> node_coords(int e, int node) const;

  int count_boundary_faces() const;
  int count_interior_face_pairs() const;

 private:
  int dim_;
  int p_;
  std::array<int, 3> elements_{1, 1, 1};
  std::array<double, 3> lo_{}, hi_{}, h_{1.0, 1.0, 1.0};
  double jac_ = 1.0;
  double volume_ = 1.0;
  int num_elements_ = 1;
  const SbpOperators* op_;
  TensorIndexMap map_;
  std::array<BoundarySpec, 6> boundary_{};
};

/// Nodal storage of nvar values per node, laid out element-major then
/// node-major with the field index innermost.
class FieldArray {
 public:
  FieldArray() = default;
  FieldArray(const Grid& grid, int nvar)
      : nvar_(nvar), nodes_per_element_(grid.nodes_per_element()), data_(grid.num_nodes() * static_cast<std::size_t>(nvar), 0.0) {}

  int nvar() const noexcept { return nvar_; }
  std::size_t size() const noexcept { return data_.size(); }
  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }
  std::vector<double>& vec() noexcept { return data_; }
  const std::vector<double>& vec() const noexcept { return data_; }

  double* node(int e, int node) {
    return data_.data() + (static_cast<std::size_t>(e) * static_cast<std::size_t>(nodes_per_element_) + static_cast<std::size_t>(node)) * static_cast<std::size_t>(nvar_);
  }
  const double* node(int e, int node) const {
    return data_.data() + (static_cast<std::size_t>(e) * static_cast<std::size_t>(nodes_per_element_) + static_cast<std::size_t>(node)) * static_cast<std::size_t>(nvar_);
  }

 private:
  int nvar_ = 0;
  int nodes_per_element_ = 0;
  std::vector<double> data_;
};

template <int Dim>
using PrimFunction = std::function<PrimState<Dim>(const std::array<double, 3>&)>;

/// Collocates a primitive-state function on the grid nodes and returns the
/// conservative field.
template <int Dim>
FieldArray project_function(const Grid& grid, const GasModel& gas, const PrimFunction<Dim>& f) {
  if (grid.dim() != Dim) throw ShapeMismatch("grid dimension does not match state dimension");
  FieldArray q(grid, Dim + 2);
  for (int e = 0; e < grid.num_elements(); ++e) {
    for (int k = 0; k < grid.nodes_per_element(); ++k) {
      const auto x = grid.node_coords(e, k);
      const PrimState<Dim> v = f(x);
      if (!is_physical(v)) {
        throw NonphysicalState("initial state is not physical", v.rho > 0.0 ? "T" : "rho",
                               v.rho > 0.0 ? v.T : v.rho, e, k);
      }
      const auto c = prim_to_cons(gas, v).c;
      double* dst = q.node(e, k);
      for (int i = 0; i < Dim + 2; ++i) dst[i] = c[static_cast<std::size_t>(i)];
    }
  }
  return q;
}

}  // namespace esdg
