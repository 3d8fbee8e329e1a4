#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "esdg/face_kernel.hpp"
#include "esdg/gas.hpp"
#include "esdg/mesh.hpp"
#include "esdg/sbp.hpp"

namespace esdg {

struct SemidiscreteOptions {
  Model model = Model::Eulerian;
  InterfaceFlux interface_flux = InterfaceFlux::EntropyConservative;
  double beta_interface = 0.0;  // interior IP strength, scaled by 1/h
  double beta0 = 0.0;           // wall IP strength, beta_ip = beta0 / h_n
};

/// Pointwise volume source; writes nvar values for position x at time t.
using SourceFunction = std::function<void(const std::array<double, 3>& x, double t, double* out)>;

/// Face-level bookkeeping of one rhs evaluation, in P-hat weighted sums.
struct RhsRecord {
  double xi = 0.0;             // all face contributions to the entropy rate
  double xi_interior = 0.0;
  double xi_wall = 0.0;
  double boundary_data = 0.0;  // face quadrature of w^T L (heat entropy flux)
  double ip = 0.0;             // w^T M over interior faces and walls
  double dissipation = 0.0;    // DT
  double source = 0.0;         // volume source power w^T s
  std::array<double, 5> wall_rate{};  // net wall flux into the domain per component
};

/// Semidiscrete right-hand side on a Cartesian tensor-product grid.
template <int Dim>
class Semidiscretization {
 public:
  static constexpr int kNvar = Dim + 2;

  Semidiscretization(const Grid& grid, const GasModel& gas, SemidiscreteOptions options);

  const Grid& grid() const noexcept { return grid_; }
  const GasModel& gas() const noexcept { return gas_; }
  const SemidiscreteOptions& options() const noexcept { return opt_; }
  std::size_t size() const noexcept { return grid_.num_nodes() * static_cast<std::size_t>(kNvar); }
  bool viscous() const noexcept { return viscous_; }

  void set_source(SourceFunction f) { source_ = std::move(f); }

  /// dq/dt for state q at time t.  Throws NonphysicalState naming element,
  /// node and field when a node state is invalid.
  void rhs(std::span<const double> q, double t, std::span<double> dqdt, RhsRecord* record = nullptr) const;

  /// Lifted entropy-variable gradients Theta_d only.
  void compute_theta(std::span<const double> q, double t) const;

  /// Workspace views from the most recent rhs or compute_theta call.
  const std::vector<double>& theta(int d) const { return theta_[static_cast<std::size_t>(d)]; }
  const std::vector<double>& sigma(int d) const { return sigma_[static_cast<std::size_t>(d)]; }
  const std::vector<double>& entropy_variables() const { return w_; }

  /// Diagonal norm weight P-hat of node k (any element).
  double node_weight(int node) const { return weights_[static_cast<std::size_t>(node)]; }
  PrimState<Dim> prim(int e, int node) const { return prim_[idx(e, node)]; }

 private:
  std::size_t idx(int e, int node) const {
    return static_cast<std::size_t>(e) * static_cast<std::size_t>(npe_) + static_cast<std::size_t>(node);
  }
  void prepare(std::span<const double> q) const;
  void gradients(double t) const;
  void volume_inviscid(std::span<double> dqdt) const;
  void volume_viscous(std::span<double> dqdt) const;
  void faces(double t, std::span<double> dqdt, RhsRecord* record) const;
  double wall_beta(int d) const { return opt_.beta0 / grid_.h(d); }
  double interface_beta(int d) const { return opt_.beta_interface / grid_.h(d); }

  const Grid& grid_;
  GasModel gas_;
  SemidiscreteOptions opt_;
  SourceFunction source_;
  bool viscous_;
  int npe_;
  std::vector<double> weights_;  // per element node, includes the Jacobian

  mutable std::vector<PrimState<Dim>> prim_;
  mutable std::vector<double> w_;
  mutable std::array<std::vector<double>, Dim> theta_;
  mutable std::array<std::vector<double>, Dim> sigma_;
};

extern template class Semidiscretization<1>;
extern template class Semidiscretization<2>;
extern template class Semidiscretization<3>;

/// Flux-differenced divergence r_i = 2 sum_j D_ij f*(v_i, v_j) along one
/// line of n nodes in reference coordinates.  Since the rows of D sum to
/// zero it is evaluated as 2 sum_j D_ij (f*(v_i, v_j) - f(v_i)), which
/// vanishes exactly on uniform lines.
template <int Dim, class Flux>
void flux_differenced_divergence(const SbpOperators& op, const PrimState<Dim>* v, Flux&& flux,
                                 Vars<Dim>* out) {
  const int n = op.n;
  std::array<Vars<Dim>, kMaxDegree + 1> self;
  for (int i = 0; i < n; ++i) {
    out[i] = Vars<Dim>{};
    self[static_cast<std::size_t>(i)] = flux(v[i], v[i]);
  }
  for (int i = 0; i < n; ++i) {
    const auto& fi = self[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const auto& fj = self[static_cast<std::size_t>(j)];
      const Vars<Dim> fij = flux(v[i], v[j]);
      const double dij = 2.0 * op.D(i, j);
      const double dji = 2.0 * op.D(j, i);
      for (int c = 0; c < Dim + 2; ++c) {
        const auto k = static_cast<std::size_t>(c);
        out[i][k] += dij * (fij[k] - fi[k]);
        out[j][k] += dji * (fij[k] - fj[k]);
      }
    }
  }
}

}  // namespace esdg
