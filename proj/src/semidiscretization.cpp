#include "esdg/semidiscretization.hpp"

#include <string>

#include "esdg/wall_bc.hpp"

namespace esdg {

namespace {

constexpr int kMaxNodes = kMaxDegree + 1;

const char* field_name(int c, int nvar) {
  if (c == 0) return "rho";
  if (c == nvar - 1) return "rhoE";
  return "rhoU";
}

}  // namespace

template <int Dim>
Semidiscretization<Dim>::Semidiscretization(const Grid& grid, const GasModel& gas, SemidiscreteOptions options)
    : grid_(grid), gas_(gas), opt_(options), npe_(grid.nodes_per_element()) {
  if (grid.dim() != Dim) throw ConfigError("grid dimension does not match discretization");
  if (opt_.model == Model::Cns && Dim != 1) throw ConfigError("model cns requires ndim = 1");
  if (!(opt_.beta0 >= 0.0) || !(opt_.beta_interface >= 0.0)) throw ConfigError("penalty strengths must be nonnegative");
  viscous_ = gas_.mu > 0.0 || gas_.beta_diff > 0.0;

  const auto& op = grid.op();
  const auto& map = grid.map();
  weights_.resize(static_cast<std::size_t>(npe_));
  for (int k = 0; k < npe_; ++k) {
    const auto ijk = map.ijk(k);
    double wgt = grid.jacobian();
    for (int d = 0; d < Dim; ++d) wgt *= op.P[static_cast<std::size_t>(ijk[static_cast<std::size_t>(d)])];
    weights_[static_cast<std::size_t>(k)] = wgt;
  }
  const std::size_t nodes = grid.num_nodes();
  prim_.resize(nodes);
  w_.assign(nodes * kNvar, 0.0);
  for (int d = 0; d < Dim; ++d) {
    theta_[static_cast<std::size_t>(d)].assign(nodes * kNvar, 0.0);
    sigma_[static_cast<std::size_t>(d)].assign(nodes * kNvar, 0.0);
  }
}

template <int Dim>
void Semidiscretization<Dim>::prepare(std::span<const double> q) const {
  if (q.size() != size()) {
    throw ShapeMismatch("state has " + std::to_string(q.size()) + " values, expected " + std::to_string(size()));
  }
  const int nel = grid_.num_elements();
  for (int e = 0; e < nel; ++e) {
    for (int k = 0; k < npe_; ++k) {
      const std::size_t a = idx(e, k);
      ConsState<Dim> cs;
      for (int c = 0; c < kNvar; ++c) cs.c[static_cast<std::size_t>(c)] = q[a * kNvar + static_cast<std::size_t>(c)];
      try {
        prim_[a] = cons_to_prim(gas_, cs);
      } catch (const NonphysicalState& err) {
        const int c = err.field() == "rho" ? 0 : kNvar - 1;
        throw NonphysicalState("nonphysical state at element " + std::to_string(e) + ", node " + std::to_string(k) +
                                   " (" + err.field() + " = " + std::to_string(err.value()) + ", " +
                                   field_name(c, kNvar) + " = " + std::to_string(cs.c[static_cast<std::size_t>(c)]) + ")",
                               err.field(), err.value(), e, k);
      }
      const auto w = entropy_vars(gas_, prim_[a]).c;
      for (int c = 0; c < kNvar; ++c) w_[a * kNvar + static_cast<std::size_t>(c)] = w[static_cast<std::size_t>(c)];
    }
  }
}

template <int Dim>
void Semidiscretization<Dim>::gradients(double /*t*/) const {
  const auto& op = grid_.op();
  const auto& map = grid_.map();
  const int n = op.n;
  const int nel = grid_.num_elements();
  for (int d = 0; d < Dim; ++d) {
    auto& th = theta_[static_cast<std::size_t>(d)];
    const double scale = 2.0 / grid_.h(d);
    const int stride = map.stride(d);
    for (int e = 0; e < nel; ++e) {
      const std::size_t base = idx(e, 0);
      for (int start : map.line_starts(d)) {
        for (int i = 0; i < n; ++i) {
          const std::size_t ai = (base + static_cast<std::size_t>(start + i * stride)) * kNvar;
          for (int c = 0; c < kNvar; ++c) {
            // Rows of D sum to zero; differencing against node i keeps
            // uniform data exactly stationary.
            const double xi = w_[ai + static_cast<std::size_t>(c)];
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
              acc += op.D(i, j) * (w_[(base + static_cast<std::size_t>(start + j * stride)) * kNvar + static_cast<std::size_t>(c)] - xi);
            }
            th[ai + static_cast<std::size_t>(c)] = scale * acc;
          }
        }
      }
    }
    // Lifted BR1 gradient penalties.
    for (int e = 0; e < nel; ++e) {
      for (int side : {-1, 1}) {
        const FaceLink link = grid_.neighbor(e, d, side);
        const auto& here = map.face(d, side);
        const auto& there = map.face(d, -side);
        const double lift = scale / op.P[static_cast<std::size_t>(side > 0 ? n - 1 : 0)];
        for (std::size_t f = 0; f < here.size(); ++f) {
          const std::size_t a = idx(e, here[f]);
          Vars<Dim> w, w_rem;
          for (int c = 0; c < kNvar; ++c) w[static_cast<std::size_t>(c)] = w_[a * kNvar + static_cast<std::size_t>(c)];
          if (link.is_boundary()) {
            const auto& wall = grid_.boundary(link.boundary);
            w_rem = entropy_vars(gas_, mirror_viscous(prim_[a], wall)).c;
          } else {
            const std::size_t b = idx(link.element, there[f]);
            for (int c = 0; c < kNvar; ++c) w_rem[static_cast<std::size_t>(c)] = w_[b * kNvar + static_cast<std::size_t>(c)];
          }
          const Vars<Dim> gt = theta_penalty(side, w, w_rem);
          for (int c = 0; c < kNvar; ++c) th[a * kNvar + static_cast<std::size_t>(c)] += lift * gt[static_cast<std::size_t>(c)];
        }
      }
    }
    // Normal viscous fluxes sigma_d = C(v) Theta_d.
    auto& sg = sigma_[static_cast<std::size_t>(d)];
    const std::size_t nodes = grid_.num_nodes();
    for (std::size_t a = 0; a < nodes; ++a) {
      const Mat<Dim> C = viscous_matrix(opt_.model, gas_, prim_[a]);
      for (int r = 0; r < kNvar; ++r) {
        double acc = 0.0;
        for (int c = 0; c < kNvar; ++c) acc += C[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * th[a * kNvar + static_cast<std::size_t>(c)];
        sg[a * kNvar + static_cast<std::size_t>(r)] = acc;
      }
    }
  }
}

template <int Dim>
void Semidiscretization<Dim>::volume_inviscid(std::span<double> dqdt) const {
  const auto& op = grid_.op();
  const auto& map = grid_.map();
  const int n = op.n;
  const int nel = grid_.num_elements();
  std::array<PrimState<Dim>, kMaxNodes> line{};
  std::array<Vars<Dim>, kMaxNodes> r{};
  for (int d = 0; d < Dim; ++d) {
    const double scale = 2.0 / grid_.h(d);
    const int stride = map.stride(d);
    auto flux = [&](const PrimState<Dim>& a, const PrimState<Dim>& b) {
      return &a == &b ? inviscid_flux(gas_, a, d) : ec_two_point_flux(gas_, a, b, d);
    };
    for (int e = 0; e < nel; ++e) {
      const std::size_t base = idx(e, 0);
      for (int start : map.line_starts(d)) {
        for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = prim_[base + static_cast<std::size_t>(start + i * stride)];
        flux_differenced_divergence<Dim>(op, line.data(), flux, r.data());
        for (int i = 0; i < n; ++i) {
          const std::size_t a = (base + static_cast<std::size_t>(start + i * stride)) * kNvar;
          for (int c = 0; c < kNvar; ++c) dqdt[a + static_cast<std::size_t>(c)] -= scale * r[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        }
      }
    }
  }
}

template <int Dim>
void Semidiscretization<Dim>::volume_viscous(std::span<double> dqdt) const {
  const auto& op = grid_.op();
  const auto& map = grid_.map();
  const int n = op.n;
  const int nel = grid_.num_elements();
  for (int d = 0; d < Dim; ++d) {
    const auto& sg = sigma_[static_cast<std::size_t>(d)];
    const double scale = 2.0 / grid_.h(d);
    const int stride = map.stride(d);
    for (int e = 0; e < nel; ++e) {
      const std::size_t base = idx(e, 0);
      for (int start : map.line_starts(d)) {
        for (int i = 0; i < n; ++i) {
          const std::size_t ai = (base + static_cast<std::size_t>(start + i * stride)) * kNvar;
          for (int c = 0; c < kNvar; ++c) {
            // Rows of D sum to zero; differencing against node i keeps
            // uniform data exactly stationary.
            const double xi = sg[ai + static_cast<std::size_t>(c)];
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
              acc += op.D(i, j) * (sg[(base + static_cast<std::size_t>(start + j * stride)) * kNvar + static_cast<std::size_t>(c)] - xi);
            }
            dqdt[ai + static_cast<std::size_t>(c)] += scale * acc;
          }
        }
      }
    }
  }
}

template <int Dim>
void Semidiscretization<Dim>::faces(double t, std::span<double> dqdt, RhsRecord* record) const {
  const auto& op = grid_.op();
  const auto& map = grid_.map();
  const int n = op.n;
  const int nel = grid_.num_elements();
  auto load = [&](const std::vector<double>& src, std::size_t a) {
    Vars<Dim> v;
    for (int c = 0; c < kNvar; ++c) v[static_cast<std::size_t>(c)] = src[a * kNvar + static_cast<std::size_t>(c)];
    return v;
  };
  auto side_at = [&](std::size_t a, int d) {
    FaceSide<Dim> s;
    s.v = prim_[a];
    s.w = load(w_, a);
    if (viscous_) {
      s.sigma = load(sigma_[static_cast<std::size_t>(d)], a);
      if (opt_.beta0 > 0.0 || opt_.beta_interface > 0.0) s.C = viscous_matrix(opt_.model, gas_, s.v);
    }
    return s;
  };

  for (int e = 0; e < nel; ++e) {
    for (int d = 0; d < Dim; ++d) {
      const double scale = 2.0 / grid_.h(d);
      for (int side : {-1, 1}) {
        const FaceLink link = grid_.neighbor(e, d, side);
        const auto& here = map.face(d, side);
        const auto& there = map.face(d, -side);
        const int end = side > 0 ? n - 1 : 0;
        const double lift = scale / op.P[static_cast<std::size_t>(end)];
        for (std::size_t f = 0; f < here.size(); ++f) {
          const int node = here[f];
          const std::size_t a = idx(e, node);
          const FaceSide<Dim> local = side_at(a, d);
          const Vars<Dim> f_local = inviscid_flux(gas_, local.v, d);
          Vars<Dim> total{};
          Vars<Dim> g_theta{};
          Vars<Dim> ip{};
          Vars<Dim> heat{};
          if (link.is_boundary()) {
            const auto& wall = grid_.boundary(link.boundary);
            const auto res = wall_face(side, d, opt_.interface_flux, opt_.model, gas_, wall, local, f_local,
                                       load(theta_[static_cast<std::size_t>(d)], a), wall_beta(d), t, viscous_);
            for (int c = 0; c < kNvar; ++c) {
              const auto k = static_cast<std::size_t>(c);
              total[k] = res.g_inviscid[k] + res.g_viscous_q[k] + res.M[k] + res.L[k];
            }
            g_theta = res.g_viscous_theta;
            ip = res.M;
            heat = res.L;
          } else {
            const std::size_t b = idx(link.element, there[f]);
            const FaceSide<Dim> remote = side_at(b, d);
            const auto pen = face_penalties(side, d, opt_.interface_flux, gas_, local, f_local, remote.v, remote,
                                            interface_beta(d), viscous_);
            for (int c = 0; c < kNvar; ++c) {
              const auto k = static_cast<std::size_t>(c);
              total[k] = pen.inviscid[k] + pen.viscous[k] + pen.ip[k];
            }
            if (viscous_) g_theta = theta_penalty(side, local.w, remote.w);
            ip = pen.ip;
          }
          for (int c = 0; c < kNvar; ++c) dqdt[a * kNvar + static_cast<std::size_t>(c)] += lift * total[static_cast<std::size_t>(c)];

          if (record) {
            const double omega = weights_[static_cast<std::size_t>(node)] * lift;
            const double F = entropy_scalars(gas_, local.v).F[static_cast<std::size_t>(d)];
            const double contrib =
                omega * (-side * F + dot(local.w, total) + side * dot(local.w, local.sigma) +
                         dot(local.sigma, g_theta));
            record->xi += contrib;
            record->ip += omega * dot(local.w, ip);
            if (link.is_boundary()) {
              record->xi_wall += contrib;
              record->boundary_data += omega * dot(local.w, heat);
              for (int c = 0; c < kNvar; ++c) {
                const auto k = static_cast<std::size_t>(c);
                record->wall_rate[k] += omega * (total[k] - side * f_local[k] + side * local.sigma[k]);
              }
            } else {
              record->xi_interior += contrib;
            }
          }
        }
      }
    }
  }
}

template <int Dim>
void Semidiscretization<Dim>::compute_theta(std::span<const double> q, double t) const {
  prepare(q);
  gradients(t);
}

template <int Dim>
void Semidiscretization<Dim>::rhs(std::span<const double> q, double t, std::span<double> dqdt,
                                  RhsRecord* record) const {
  if (dqdt.size() != size()) throw ShapeMismatch("rhs output has wrong length");
  prepare(q);
  std::fill(dqdt.begin(), dqdt.end(), 0.0);
  if (record) *record = RhsRecord{};
  if (viscous_) gradients(t);
  volume_inviscid(dqdt);
  if (viscous_) volume_viscous(dqdt);
  faces(t, dqdt, record);

  if (source_) {
    std::array<double, kNvar> s{};
    for (int e = 0; e < grid_.num_elements(); ++e) {
      for (int k = 0; k < npe_; ++k) {
        const std::size_t a = idx(e, k);
        s.fill(0.0);
        source_(grid_.node_coords(e, k), t, s.data());
        double power = 0.0;
        for (int c = 0; c < kNvar; ++c) {
          dqdt[a * kNvar + static_cast<std::size_t>(c)] += s[static_cast<std::size_t>(c)];
          power += w_[a * kNvar + static_cast<std::size_t>(c)] * s[static_cast<std::size_t>(c)];
        }
        if (record) record->source += weights_[static_cast<std::size_t>(k)] * power;
      }
    }
  }

  if (record && viscous_) {
    double dt_sum = 0.0;
    for (int e = 0; e < grid_.num_elements(); ++e) {
      for (int k = 0; k < npe_; ++k) {
        const std::size_t a = idx(e, k);
        double local = 0.0;
        for (int d = 0; d < Dim; ++d) {
          const auto& th = theta_[static_cast<std::size_t>(d)];
          const auto& sg = sigma_[static_cast<std::size_t>(d)];
          for (int c = 0; c < kNvar; ++c) local += th[a * kNvar + static_cast<std::size_t>(c)] * sg[a * kNvar + static_cast<std::size_t>(c)];
        }
        dt_sum += weights_[static_cast<std::size_t>(k)] * local;
      }
    }
    record->dissipation = dt_sum;
  }
}

template class Semidiscretization<1>;
template class Semidiscretization<2>;
template class Semidiscretization<3>;

}  // namespace esdg
