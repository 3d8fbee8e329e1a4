#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "esdg/diagnostics.hpp"
#include "esdg/semidiscretization.hpp"
#include "grid_fixtures.hpp"
#include "test_util.hpp"

namespace esdg {
namespace {

using testing::box_config;
using testing::make_boundary;
using testing::random_field;

TEST(Grid, ConnectivityAndMetrics) {
  GridConfig c1;
  c1.dim = 1;
  c1.p = 2;
  c1.elements = {4, 1, 1};
  Grid g1(c1);
  EXPECT_EQ(g1.neighbor(3, 0, 1).element, 0);
  EXPECT_EQ(g1.neighbor(0, 0, -1).element, 3);
  EXPECT_EQ(g1.num_nodes(), 12u);

  Grid g2(box_config(2, 1, 2, BoundaryType::AdiabaticWall, true));
  EXPECT_EQ(g2.count_boundary_faces(), 8);
  EXPECT_EQ(g2.count_interior_face_pairs(), 4);

  GridConfig c3;
  c3.dim = 1;
  c3.p = 3;
  c3.elements = {8, 1, 1};
  c3.lo = {0.0, 0.0, 0.0};
  c3.hi = {2.0, 1.0, 1.0};
  Grid g3(c3);
  EXPECT_DOUBLE_EQ(g3.h(0), 0.25);
  EXPECT_DOUBLE_EQ(g3.jacobian(), 0.125);
}

TEST(Grid, RejectsInvalidConfigs) {
  GridConfig c;
  c.dim = 2;
  c.p = 2;
  c.elements = {2, 0, 1};
  EXPECT_THROW(Grid{c}, ConfigError);
  c.elements = {2, 2, 1};
  c.boundary[2] = make_boundary(BoundaryType::AdiabaticWall);
  EXPECT_THROW(Grid{c}, ConfigError);
  c.boundary[3] = make_boundary(BoundaryType::AdiabaticWall);
  EXPECT_NO_THROW(Grid{c});
  c.p = 9;
  EXPECT_THROW(Grid{c}, InvalidDegree);
}

TEST(Grid, FaceMapsAreInvolutiveAndNodesCoincide) {
  for (int dim = 1; dim <= 3; ++dim) {
    Grid g(box_config(dim, 2, 3, BoundaryType::AdiabaticWall, false));
    for (int e = 0; e < g.num_elements(); ++e) {
      for (int d = 0; d < dim; ++d) {
        for (int side : {-1, 1}) {
          const auto link = g.neighbor(e, d, side);
          if (link.is_boundary()) continue;
          EXPECT_EQ(g.neighbor(link.element, d, -side).element, e);
          const auto& here = g.map().face(d, side);
          const auto& there = g.map().face(d, -side);
          for (std::size_t f = 0; f < here.size(); ++f) {
            const auto xa = g.node_coords(e, here[f]);
            const auto xb = g.node_coords(link.element, there[f]);
            for (int k = 0; k < dim; ++k) {
              if (k == d) continue;
              EXPECT_NEAR(xa[static_cast<std::size_t>(k)], xb[static_cast<std::size_t>(k)], 1e-14);
            }
            const bool wrap = (side > 0) != (xb[static_cast<std::size_t>(d)] > xa[static_cast<std::size_t>(d)] - 1e-12);
            if (!wrap) EXPECT_NEAR(xa[static_cast<std::size_t>(d)], xb[static_cast<std::size_t>(d)], 1e-14);
          }
        }
      }
    }
  }
}

TEST(Grid, ProjectFunction) {
  Grid g(box_config(2, 3, 2, BoundaryType::Periodic, false));
  const auto gas = testing::air();
  const auto q = project_function<2>(g, gas, [](const std::array<double, 3>& x) {
    PrimState<2> v;
    v.rho = 1.0 + 0.25 * x[0];
    return v;
  });
  // rho is linear in x1: the SBP derivative recovers the slope.
  std::vector<double> rho(static_cast<std::size_t>(g.nodes_per_element())), d(rho.size());
  for (int k = 0; k < g.nodes_per_element(); ++k) rho[static_cast<std::size_t>(k)] = q.node(1, k)[0];
  apply_derivative(g.op(), g.map(), 0, rho, 1, d);
  for (double x : d) EXPECT_NEAR(x * 2.0 / g.h(0), 0.25, 1e-13);
  EXPECT_THROW(project_function<2>(g, gas, [](const std::array<double, 3>&) {
                 PrimState<2> v;
                 v.T = -1.0;
                 return v;
               }),
               NonphysicalState);
}

TEST(FluxDifferencing, ConstantCentralAndTelescoping) {
  const auto gas = testing::air();
  std::mt19937_64 rng(21);
  for (int p = 1; p <= 7; ++p) {
    const auto& op = sbp_operators(p);
    std::vector<PrimState<2>> v(static_cast<std::size_t>(op.n));
    std::vector<Vars<2>> r(v.size());
    for (auto& s : v) s = testing::random_state<2>(rng, 0.5);
    // Central average flux reduces to D f.
    flux_differenced_divergence<2>(op, v.data(), [&](const PrimState<2>& a, const PrimState<2>& b) {
      const auto fa = inviscid_flux(gas, a, 0);
      const auto fb = inviscid_flux(gas, b, 0);
      Vars<2> f{};
      for (std::size_t c = 0; c < 4; ++c) f[c] = 0.5 * (fa[c] + fb[c]);
      return f;
    }, r.data());
    for (int i = 0; i < op.n; ++i) {
      for (std::size_t c = 0; c < 4; ++c) {
        double df = 0.0;
        for (int j = 0; j < op.n; ++j) df += op.D(i, j) * inviscid_flux(gas, v[static_cast<std::size_t>(j)], 0)[c];
        EXPECT_NEAR(r[static_cast<std::size_t>(i)][c], df, 1e-13 * std::max(1.0, std::abs(df)) * op.n);
      }
    }
    // EC flux: P-weighted sum telescopes to the end-point fluxes.
    auto ec = [&](const PrimState<2>& a, const PrimState<2>& b) { return ec_two_point_flux(gas, a, b, 0); };
    flux_differenced_divergence<2>(op, v.data(), ec, r.data());
    for (std::size_t c = 0; c < 4; ++c) {
      double s = 0.0;
      for (int i = 0; i < op.n; ++i) s += op.P[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)][c];
      const double ends = inviscid_flux(gas, v.back(), 0)[c] - inviscid_flux(gas, v.front(), 0)[c];
      EXPECT_NEAR(s, ends, 1e-12 * std::max(1.0, std::abs(ends)));
    }
    // Constant state.
    std::vector<PrimState<2>> cst(v.size(), v[0]);
    flux_differenced_divergence<2>(op, cst.data(), ec, r.data());
    for (const auto& ri : r)
      for (double x : ri) EXPECT_NEAR(x, 0.0, 1e-12);
  }
}

double rel_max(std::span<const double> a, double scale) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m / scale;
}

template <int Dim>
void check_free_stream(BoundaryType type, std::array<double, 3> u, bool walls_move) {
  const auto gas = GasModel::make(1.4, 1.0, 0.05);
  for (int p : {1, 3}) {
    auto cfg = box_config(Dim, p, 3, type, false);
    if (walls_move) {
      for (int s = 0; s < 2; ++s) cfg.boundary[static_cast<std::size_t>(2 * (Dim - 1) + s)].u_wall = u;
    }
    if (type == BoundaryType::HeatfluxWall) {
      for (auto& b : cfg.boundary) b.g.value = 0.0;
    }
    Grid grid(cfg);
    for (auto flux : {InterfaceFlux::EntropyConservative, InterfaceFlux::EntropyStable}) {
      Semidiscretization<Dim> semi(grid, gas, {Model::Eulerian, flux, 1.0, 1.0});
      const auto q = project_function<Dim>(grid, gas, [&](const std::array<double, 3>&) {
        PrimState<Dim> v;
        v.rho = 1.3;
        for (int i = 0; i < Dim; ++i) v.u[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
        v.T = 0.9;
        return v;
      });
      std::vector<double> dq(semi.size());
      semi.rhs(q.vec(), 0.0, dq);
      EXPECT_LE(rel_max(dq, 1.0), 1e-13) << "dim " << Dim << " p " << p << " type " << to_string(type);
    }
  }
}

TEST(Rhs, FreeStreamPreservation) {
  check_free_stream<1>(BoundaryType::Periodic, {0.1, 0, 0}, false);
  check_free_stream<2>(BoundaryType::Periodic, {0.1, -0.05, 0}, false);
  check_free_stream<3>(BoundaryType::Periodic, {0.1, 0.2, -0.1}, false);
  check_free_stream<1>(BoundaryType::AdiabaticWall, {0, 0, 0}, false);
  check_free_stream<2>(BoundaryType::AdiabaticWall, {0, 0, 0}, false);
  check_free_stream<2>(BoundaryType::HeatfluxWall, {0, 0, 0}, false);
  // Tangential flow along walls moving with the flow.
  check_free_stream<2>(BoundaryType::AdiabaticWall, {0.1, 0, 0}, true);
  check_free_stream<3>(BoundaryType::AdiabaticWall, {0.1, 0.05, 0}, true);
}

template <int Dim>
void check_conservation(InterfaceFlux flux, double beta_in, Model model = Model::Eulerian) {
  const auto gas = GasModel::make(1.4, 1.0, 0.07);
  std::mt19937_64 rng(31 + 7 * Dim);
  for (int p : {1, 2, 4}) {
    Grid grid(box_config(Dim, p, Dim == 3 ? 2 : 3, BoundaryType::Periodic, false));
    Semidiscretization<Dim> semi(grid, gas, {model, flux, beta_in, 0.0});
    const auto q = random_field<Dim>(grid, gas, rng);
    std::vector<double> dq(semi.size());
    semi.rhs(q, 0.0, dq);
    const auto totals = conserved_totals(grid, dq, Dim + 2);
    std::vector<double> abs_dq(dq.size());
    for (std::size_t i = 0; i < dq.size(); ++i) abs_dq[i] = std::abs(dq[i]);
    const auto scale = conserved_totals(grid, abs_dq, Dim + 2);
    for (int c = 0; c < Dim + 2; ++c) {
      EXPECT_LE(std::abs(totals[static_cast<std::size_t>(c)]), 1e-12 * std::max(1.0, scale[static_cast<std::size_t>(c)]))
          << "dim " << Dim << " p " << p << " component " << c;
    }
  }
}

TEST(Rhs, PeriodicConservation) {
  for (auto flux : {InterfaceFlux::EntropyConservative, InterfaceFlux::EntropyStable}) {
    for (double beta : {0.0, 1.0}) {
      check_conservation<1>(flux, beta);
      check_conservation<2>(flux, beta);
      check_conservation<3>(flux, beta);
      check_conservation<1>(flux, beta, Model::Cns);
    }
  }
}

TEST(Rhs, SingleElementPeriodicCouplesToItself) {
  GridConfig cfg = box_config(2, 3, 1, BoundaryType::AdiabaticWall, false);
  cfg.elements = {1, 4, 1};
  Grid grid(cfg);
  EXPECT_EQ(grid.neighbor(0, 0, 1).element, 0);
  const auto gas = GasModel::make(1.4, 1.0, 0.1);
  Semidiscretization<2> semi(grid, gas, {});
  // x1-independent state: the self-coupled periodic direction adds nothing.
  const auto q = project_function<2>(grid, gas, [](const std::array<double, 3>& x) {
    PrimState<2> v;
    v.u = {0.1 * std::sin(3.0 * x[1]), 0.0};
    return v;
  });
  std::vector<double> dq(semi.size());
  semi.rhs(q.vec(), 0.0, dq);
  // Compare with a 3-wide periodic mesh of the same field.
  GridConfig wide = cfg;
  wide.elements = {3, 4, 1};
  wide.hi[0] = 3.0;
  Grid g3(wide);
  Semidiscretization<2> s3(g3, gas, {});
  const auto q3 = project_function<2>(g3, gas, [](const std::array<double, 3>& x) {
    PrimState<2> v;
    v.u = {0.1 * std::sin(3.0 * x[1]), 0.0};
    return v;
  });
  std::vector<double> dq3(s3.size());
  s3.rhs(q3.vec(), 0.0, dq3);
  const std::size_t per = static_cast<std::size_t>(grid.nodes_per_element()) * 4;
  for (int ey = 0; ey < 4; ++ey) {
    for (int k = 0; k < grid.nodes_per_element(); ++k) {
      for (int c = 0; c < 4; ++c) {
        const double a = dq[(static_cast<std::size_t>(ey) * static_cast<std::size_t>(grid.nodes_per_element()) + static_cast<std::size_t>(k)) * 4 + static_cast<std::size_t>(c)];
        const double b = dq3[(static_cast<std::size_t>(g3.element_index({1, ey, 0})) * static_cast<std::size_t>(grid.nodes_per_element()) + static_cast<std::size_t>(k)) * 4 + static_cast<std::size_t>(c)];
        EXPECT_NEAR(a, b, 1e-12);
      }
    }
  }
  (void)per;
}

TEST(Ldg, GradientOfLinearFieldAndJumpLift) {
  const auto gas = GasModel::make(1.4, 1.0, 0.1);
  // w linear in x on an interior element: exact gradient.
  GridConfig cfg = box_config(1, 3, 3, BoundaryType::AdiabaticWall, true);
  Grid grid(cfg);
  Semidiscretization<1> semi(grid, gas, {});
  const Vars<1> w0{-2.0, 0.1, -1.0}, a{0.3, 0.2, 0.25};
  auto prim_of_w = [&](const Vars<1>& w) {
    PrimState<1> v;
    v.T = -1.0 / w[2];
    v.u[0] = w[1] * v.T;
    const double s = gas.cp - w[0] - v.u[0] * v.u[0] / (2.0 * v.T);
    v.rho = std::exp((gas.cv * std::log(v.T) - s) / gas.R);
    return v;
  };
  const auto q = project_function<1>(grid, gas, [&](const std::array<double, 3>& x) {
    Vars<1> w;
    for (std::size_t c = 0; c < 3; ++c) w[c] = w0[c] + a[c] * x[0];
    return prim_of_w(w);
  });
  semi.compute_theta(q.vec(), 0.0);
  const auto& th = semi.theta(0);
  const int n = grid.n();
  for (int e = 0; e < 3; ++e) {
    for (int k = 0; k < n; ++k) {
      const bool wall_node = (e == 0 && k == 0) || (e == 2 && k == n - 1);
      if (wall_node) continue;
      for (std::size_t c = 0; c < 3; ++c) {
        EXPECT_NEAR(th[(static_cast<std::size_t>(e * n + k)) * 3 + c], a[c], 1e-11) << e << " " << k;
      }
    }
  }

  // Two elements, piecewise-constant states: Theta lives on face nodes only.
  GridConfig c2 = box_config(1, 2, 2, BoundaryType::Periodic, false);
  Grid g2(c2);
  Semidiscretization<1> s2(g2, gas, {});
  PrimState<1> A, B;
  B.rho = 1.4;
  B.u = {0.2};
  B.T = 0.8;
  FieldArray q2(g2, 3);
  for (int e = 0; e < 2; ++e) {
    const auto c = prim_to_cons(gas, e == 0 ? A : B).c;
    for (int k = 0; k < g2.nodes_per_element(); ++k) std::copy(c.begin(), c.end(), q2.node(e, k));
  }
  s2.compute_theta(q2.vec(), 0.0);
  const auto wA = entropy_vars(gas, A).c, wB = entropy_vars(gas, B).c;
  const double lift = (2.0 / g2.h(0)) / g2.op().P[0];
  const auto& t2 = s2.theta(0);
  for (std::size_t c = 0; c < 3; ++c) {
    EXPECT_NEAR(t2[0 * 3 + c], -lift * 0.5 * (wB[c] - wA[c]), 1e-12);   // element 0, low face
    EXPECT_NEAR(t2[1 * 3 + c], 0.0, 1e-12);                             // interior node
    EXPECT_NEAR(t2[2 * 3 + c], lift * 0.5 * (wB[c] - wA[c]), 1e-12);    // element 0, high face
    EXPECT_NEAR(t2[3 * 3 + c], -lift * 0.5 * (wA[c] - wB[c]), 1e-12);   // element 1, low face
  }
}

TEST(Rhs, NonphysicalNodeIsReported) {
  const auto gas = testing::air();
  Grid grid(box_config(2, 2, 2, BoundaryType::Periodic, false));
  Semidiscretization<2> semi(grid, gas, {});
  std::mt19937_64 rng(1);
  auto q = random_field<2>(grid, gas, rng, 0.1);
  const std::size_t bad = (static_cast<std::size_t>(3) * 9 + 4) * 4;
  q[bad + 3] = 0.0;
  std::vector<double> dq(semi.size());
  try {
    semi.rhs(q, 0.0, dq);
    FAIL() << "expected NonphysicalState";
  } catch (const NonphysicalState& e) {
    EXPECT_EQ(e.element(), 3);
    EXPECT_EQ(e.node(), 4);
    EXPECT_EQ(e.field(), "T");
  }
  EXPECT_THROW(semi.rhs(std::vector<double>(3), 0.0, dq), ShapeMismatch);
}

struct BudgetCase {
  int dim;
  Model model;
  BoundaryType type;
  double beta0;
  InterfaceFlux flux;
};

template <int Dim>
EntropyBudget budget_for(const BudgetCase& bc, int p, std::mt19937_64& rng, RhsRecord* rec = nullptr,
                         double beta_in = -1.0) {
  const auto gas = GasModel::make(1.4, 1.0, 0.08);
  Grid grid(box_config(Dim, p, Dim == 1 ? 4 : 3, bc.type, true, {0.3, 0.1, 0.0}));
  Semidiscretization<Dim> semi(grid, gas, {bc.model, bc.flux, beta_in < 0.0 ? bc.beta0 : beta_in, bc.beta0});
  const auto q = random_field<Dim>(grid, gas, rng, 0.4);
  std::vector<double> dq(semi.size());
  return entropy_budget(semi, q, 0.3, dq, rec);
}

TEST(EntropyBudget, IdentityHoldsOnRandomStates) {
  std::mt19937_64 rng(77);
  std::vector<BudgetCase> cases;
  for (auto type : {BoundaryType::Periodic, BoundaryType::AdiabaticWall, BoundaryType::HeatfluxWall,
                    BoundaryType::IsothermalWall}) {
    for (double beta : {0.0, 1.0}) {
      for (auto flux : {InterfaceFlux::EntropyConservative, InterfaceFlux::EntropyStable}) {
        for (int dim : {1, 2, 3}) cases.push_back({dim, Model::Eulerian, type, beta, flux});
        cases.push_back({1, Model::Cns, type, beta, flux});
      }
    }
  }
  for (const auto& bc : cases) {
    for (int p : {1, 2, 4}) {
      if (bc.dim == 3 && p == 4) continue;
      const EntropyBudget b = bc.dim == 1 ? budget_for<1>(bc, p, rng)
                              : bc.dim == 2 ? budget_for<2>(bc, p, rng)
                                            : budget_for<3>(bc, p, rng);
      EXPECT_LE(b.relative_residual(), 1e-11)
          << "dim " << bc.dim << " model " << to_string(bc.model) << " bc " << to_string(bc.type) << " beta "
          << bc.beta0 << " flux " << to_string(bc.flux) << " p " << p;
      EXPECT_GE(b.DT, 0.0);
    }
  }
}

TEST(EntropyBudget, ConservativeCouplingHasNoFaceProduction) {
  std::mt19937_64 rng(78);
  for (Model model : {Model::Eulerian, Model::Cns}) {
    for (int p : {1, 3, 5}) {
      for (auto type : {BoundaryType::Periodic, BoundaryType::AdiabaticWall}) {
        BudgetCase bc{1, model, type, 0.0, InterfaceFlux::EntropyConservative};
        RhsRecord rec;
        const auto b = budget_for<1>(bc, p, rng, &rec);
        EXPECT_LE(std::abs(b.Xi) / b.scale, 1e-12);
        EXPECT_LE(std::abs(rec.xi_interior) / b.scale, 1e-12);
        EXPECT_LE(std::abs(b.dSdt + b.DT) / b.scale, 1e-11);
      }
    }
  }
  for (int p : {1, 2, 4}) {
    BudgetCase bc{2, Model::Eulerian, BoundaryType::AdiabaticWall, 0.0, InterfaceFlux::EntropyConservative};
    const auto b = budget_for<2>(bc, p, rng);
    EXPECT_LE(std::abs(b.Xi) / b.scale, 1e-12);
  }
}

TEST(EntropyBudget, HeatFluxWallProducesFaceQuadratureOfG) {
  std::mt19937_64 rng(79);
  for (int p : {1, 2, 4}) {
    BudgetCase bc{2, Model::Eulerian, BoundaryType::HeatfluxWall, 0.0, InterfaceFlux::EntropyConservative};
    const auto b = budget_for<2>(bc, p, rng);
    // g = 1e-3 (1 + s + d) on each face of the unit square, face length 1.
    const double expected = 1e-3 * (1 + 2 + 2 + 3);
    EXPECT_NEAR(b.boundary_data, expected, 1e-15);
    EXPECT_LE(std::abs(b.dSdt + b.DT - b.boundary_data) / b.scale, 1e-11);
  }
}

TEST(EntropyBudget, DissipativeCouplingsReduceFaceProduction) {
  std::mt19937_64 rng(80);
  for (int p : {1, 3}) {
    for (auto flux : {InterfaceFlux::EntropyConservative, InterfaceFlux::EntropyStable}) {
      BudgetCase bc{2, Model::Eulerian, BoundaryType::Periodic, 0.0, flux};
      RhsRecord rec;
      const auto dissipative = budget_for<2>(bc, p, rng, &rec, 1.0);
      EXPECT_LT(rec.xi_interior, 0.0);
      (void)dissipative;
    }
    BudgetCase es{1, Model::Eulerian, BoundaryType::Periodic, 0.0, InterfaceFlux::EntropyStable};
    RhsRecord rec;
    budget_for<1>(es, p, rng, &rec, 0.0);
    EXPECT_LT(rec.xi_interior, 0.0);
  }
}

TEST(EntropyBudget, PenaltiesAreDissipativeAtStationaryWalls) {
  std::mt19937_64 rng(81);
  const auto gas = GasModel::make(1.4, 1.0, 0.08);
  for (int p : {1, 3}) {
    Grid grid(box_config(2, p, 3, BoundaryType::AdiabaticWall, true));
    Semidiscretization<2> semi(grid, gas, {Model::Eulerian, InterfaceFlux::EntropyStable, 1.0, 1.0});
    const auto q = random_field<2>(grid, gas, rng, 0.4);
    std::vector<double> dq(semi.size());
    RhsRecord rec;
    const auto b = entropy_budget(semi, q, 0.0, dq, &rec);
    EXPECT_LT(b.ip, 0.0);
    EXPECT_LT(b.Xi, 0.0);
  }
}

TEST(Diagnostics, NormsAndTotals) {
  Grid grid(box_config(1, 3, 4, BoundaryType::Periodic, false));
  std::vector<double> e(grid.num_nodes(), 0.0);
  auto n0 = discrete_norms(grid, e);
  EXPECT_EQ(n0.L1, 0.0);
  EXPECT_EQ(n0.Linf, 0.0);
  std::fill(e.begin(), e.end(), -2.5);
  const auto nc = discrete_norms(grid, e);
  EXPECT_NEAR(nc.L1, 2.5, 1e-14);
  EXPECT_NEAR(nc.L2, 2.5, 1e-14);
  EXPECT_NEAR(nc.Linf, 2.5, 1e-14);
  for (int el = 0; el < grid.num_elements(); ++el)
    for (int k = 0; k < grid.nodes_per_element(); ++k)
      e[static_cast<std::size_t>(el * grid.nodes_per_element() + k)] = grid.node_coords(el, k)[0];
  EXPECT_NEAR(discrete_norms(grid, e).L2, 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_THROW(discrete_norms(grid, std::vector<double>(3)), ShapeMismatch);

  Grid g2(box_config(2, 2, 3, BoundaryType::AdiabaticWall, true));
  const auto gas = testing::air();
  const auto q = project_function<2>(g2, gas, [](const std::array<double, 3>&) { return PrimState<2>{}; });
  const auto tot = conserved_totals(g2, q.vec(), 4);
  EXPECT_NEAR(tot[0], 1.0, 1e-14);
  EXPECT_NEAR(tot[3], gas.cv, 1e-14);
}

TEST(Diagnostics, RestStateBudgetVanishes) {
  const auto gas = GasModel::make(1.4, 1.0, 0.1);
  Grid grid(box_config(2, 3, 2, BoundaryType::AdiabaticWall, true));
  Semidiscretization<2> semi(grid, gas, {Model::Eulerian, InterfaceFlux::EntropyStable, 1.0, 1.0});
  const auto q = project_function<2>(grid, gas, [](const std::array<double, 3>&) { return PrimState<2>{}; });
  std::vector<double> dq(semi.size());
  const auto b = entropy_budget(semi, q.vec(), 0.0, dq);
  EXPECT_NEAR(b.dSdt, 0.0, 1e-15);
  EXPECT_NEAR(b.DT, 0.0, 1e-15);
  EXPECT_NEAR(b.Xi, 0.0, 1e-15);
}

TEST(Diagnostics, WallMassRateMatchesTotalMassRate) {
  const auto gas = GasModel::make(1.4, 1.0, 0.1);
  Grid grid(box_config(2, 3, 3, BoundaryType::AdiabaticWall, true, {0.2, 0.0, 0.0}));
  Semidiscretization<2> semi(grid, gas, {Model::Eulerian, InterfaceFlux::EntropyStable, 1.0, 1.0});
  std::mt19937_64 rng(5);
  const auto q = random_field<2>(grid, gas, rng, 0.3);
  std::vector<double> dq(semi.size());
  RhsRecord rec;
  semi.rhs(q, 0.0, dq, &rec);
  const auto tot = conserved_totals(grid, dq, 4);
  for (std::size_t c = 0; c < 4; ++c) EXPECT_NEAR(tot[c], rec.wall_rate[c], 1e-11 * std::max(1.0, std::abs(tot[c])));
}

}  // namespace
}  // namespace esdg
