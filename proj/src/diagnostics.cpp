#include "esdg/diagnostics.hpp"

#include <string>

namespace esdg {

namespace {

double node_weight(const Grid& grid, int node) {
  const auto ijk = grid.map().ijk(node);
  double w = grid.jacobian();
  for (int d = 0; d < grid.dim(); ++d) w *= grid.op().P[static_cast<std::size_t>(ijk[static_cast<std::size_t>(d)])];
  return w;
}

}  // namespace

Norms discrete_norms(const Grid& grid, std::span<const double> error) {
  if (error.size() != grid.num_nodes()) {
    throw ShapeMismatch("error field has " + std::to_string(error.size()) + " values, grid has " +
                        std::to_string(grid.num_nodes()) + " nodes");
  }
  const int npe = grid.nodes_per_element();
  std::vector<double> wts(static_cast<std::size_t>(npe));
  for (int k = 0; k < npe; ++k) wts[static_cast<std::size_t>(k)] = node_weight(grid, k);
  Norms n;
  double l2 = 0.0;
  for (int e = 0; e < grid.num_elements(); ++e) {
    for (int k = 0; k < npe; ++k) {
      const double v = error[static_cast<std::size_t>(e) * static_cast<std::size_t>(npe) + static_cast<std::size_t>(k)];
      const double wk = wts[static_cast<std::size_t>(k)];
      n.L1 += wk * std::abs(v);
      l2 += wk * v * v;
      n.Linf = std::max(n.Linf, std::abs(v));
    }
  }
  n.L1 /= grid.volume();
  n.L2 = std::sqrt(l2 / grid.volume());
  return n;
}

Norms discrete_norms(const Grid& grid, std::span<const double> a, std::span<const double> b, int nvar, int field) {
  const std::size_t expected = grid.num_nodes() * static_cast<std::size_t>(nvar);
  if (a.size() != expected || b.size() != expected) throw ShapeMismatch("field sizes do not match the grid");
  if (field < 0 || field >= nvar) throw ShapeMismatch("field index out of range");
  std::vector<double> e(grid.num_nodes());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::size_t k = i * static_cast<std::size_t>(nvar) + static_cast<std::size_t>(field);
    e[i] = a[k] - b[k];
  }
  return discrete_norms(grid, e);
}

std::vector<double> conserved_totals(const Grid& grid, std::span<const double> q, int nvar) {
  const std::size_t expected = grid.num_nodes() * static_cast<std::size_t>(nvar);
  if (q.size() != expected) throw ShapeMismatch("state size does not match the grid");
  const int npe = grid.nodes_per_element();
  std::vector<double> totals(static_cast<std::size_t>(nvar), 0.0);
  for (int e = 0; e < grid.num_elements(); ++e) {
    for (int k = 0; k < npe; ++k) {
      const double wk = node_weight(grid, k);
      const std::size_t a = (static_cast<std::size_t>(e) * static_cast<std::size_t>(npe) + static_cast<std::size_t>(k)) *
                            static_cast<std::size_t>(nvar);
      for (int c = 0; c < nvar; ++c) totals[static_cast<std::size_t>(c)] += wk * q[a + static_cast<std::size_t>(c)];
    }
  }
  return totals;
}

}  // namespace esdg
