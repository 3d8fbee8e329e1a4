#include "esdg/sbp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <string>

#include "esdg/error.hpp"

namespace esdg {

namespace {

void check_degree(int p) {
  if (p < kMinDegree || p > kMaxDegree) {
    throw InvalidDegree("SBP degree " + std::to_string(p) + " outside supported range [" +
                        std::to_string(kMinDegree) + ", " + std::to_string(kMaxDegree) + "]");
  }
}

// Legendre polynomials P_p(x) and P_{p-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int p, double x) {
  double prev = 1.0;
  double curr = x;
  for (int k = 2; k <= p; ++k) {
    const double next = ((2.0 * k - 1.0) * x * curr - (k - 1.0) * prev) / k;
    prev = curr;
    curr = next;
  }
  return {curr, prev};
}

}  // namespace

LglRule lgl_nodes_weights(int p) {
  if (p < 1) {
    throw InvalidDegree("LGL rule needs degree >= 1, got " + std::to_string(p));
  }
  const int n = p + 1;
  LglRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  for (int j = 0; j < n; ++j) {
    // Chebyshev-Gauss-Lobatto start; Newton on x P_p - P_{p-1}, which is a
    // multiple of (1 - x^2) P'_p.
    double x = -std::cos(std::numbers::pi * j / p);
    for (int it = 0; it < 100; ++it) {
      const auto [pp, pm] = legendre_pair(p, x);
      const double dx = (x * pp - pm) / (n * pp);
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(j)] = x;
  }
  std::sort(rule.nodes.begin(), rule.nodes.end());
  rule.nodes.front() = -1.0;
  rule.nodes.back() = 1.0;
  for (int j = 0; j < n / 2; ++j) {
    const double a = 0.5 * (rule.nodes[static_cast<std::size_t>(p - j)] - rule.nodes[static_cast<std::size_t>(j)]);
    rule.nodes[static_cast<std::size_t>(j)] = -a;
    rule.nodes[static_cast<std::size_t>(p - j)] = a;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(p / 2)] = 0.0;

  for (int j = 0; j < n; ++j) {
    const double x = rule.nodes[static_cast<std::size_t>(j)];
    const double pp = legendre_pair(p, x).first;
    rule.weights[static_cast<std::size_t>(j)] = 2.0 / (p * (p + 1.0) * pp * pp);
  }
  return rule;
}

SbpOperators build_sbp(int p) {
  check_degree(p);
  SbpOperators op;
  op.p = p;
  op.n = p + 1;
  const int n = op.n;
  auto rule = lgl_nodes_weights(p);
  op.nodes = std::move(rule.nodes);
  op.P = std::move(rule.weights);

  std::vector<double> bary(static_cast<std::size_t>(n), 1.0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k != j) bary[static_cast<std::size_t>(j)] *= op.nodes[static_cast<std::size_t>(j)] - op.nodes[static_cast<std::size_t>(k)];
    }
    bary[static_cast<std::size_t>(j)] = 1.0 / bary[static_cast<std::size_t>(j)];
  }

  DenseMatrix lagrange(n, n);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = (bary[static_cast<std::size_t>(j)] / bary[static_cast<std::size_t>(i)]) /
                       (op.nodes[static_cast<std::size_t>(i)] - op.nodes[static_cast<std::size_t>(j)]);
      lagrange(i, j) = v;
      diag -= v;
    }
    lagrange(i, i) = diag;
  }

  op.B = DenseMatrix(n, n);
  op.B(0, 0) = -1.0;
  op.B(n - 1, n - 1) = 1.0;

  // Q = S + B/2 with S exactly skew, so Q + Q^T = B holds bitwise.
  op.Q = DenseMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    op.Q(i, i) = 0.5 * op.B(i, i);
    for (int j = i + 1; j < n; ++j) {
      const double pi = op.P[static_cast<std::size_t>(i)];
      const double pj = op.P[static_cast<std::size_t>(j)];
      const double s = 0.5 * (pi * lagrange(i, j) - pj * lagrange(j, i));
      op.Q(i, j) = s;
      op.Q(j, i) = -s;
    }
  }
  op.D = DenseMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) op.D(i, j) = op.Q(i, j) / op.P[static_cast<std::size_t>(i)];
  }

  op.Delta = DenseMatrix(n, n + 1);
  for (int i = 0; i < n; ++i) {
    op.Delta(i, i) = -1.0;
    op.Delta(i, i + 1) = 1.0;
  }
  // Flux points: row k accumulates rows 0..k-1 of Q on top of e_0.
  op.I_stof = DenseMatrix(n + 1, n);
  op.I_stof(0, 0) = 1.0;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j < n; ++j) op.I_stof(k, j) = op.I_stof(k - 1, j) + op.Q(k - 1, j);
  }
  return op;
}

const SbpOperators& sbp_operators(int p) {
  static const std::array<SbpOperators, kMaxDegree> cache = [] {
    std::array<SbpOperators, kMaxDegree> ops;
    for (int d = kMinDegree; d <= kMaxDegree; ++d) ops[static_cast<std::size_t>(d - 1)] = build_sbp(d);
    return ops;
  }();
  check_degree(p);
  return cache[static_cast<std::size_t>(p - 1)];
}

TensorIndexMap::TensorIndexMap(int dim, int n) : dim_(dim), n_(n) {
  if (dim < 1 || dim > 3) throw ShapeMismatch("dimension must be 1, 2 or 3");
  if (n < 2) throw ShapeMismatch("need at least two nodes per direction");
  nodes_ = 1;
  for (int d = 0; d < dim; ++d) nodes_ *= n;
  face_nodes_ = nodes_ / n;
  strides_ = {1, n, n * n};

  for (int d = 0; d < dim; ++d) {
    auto& lo = faces_[static_cast<std::size_t>(2 * d)];
    auto& hi = faces_[static_cast<std::size_t>(2 * d + 1)];
    auto& lines = lines_[static_cast<std::size_t>(d)];
    for (int node = 0; node < nodes_; ++node) {
      const auto idx = ijk(node);
      if (idx[static_cast<std::size_t>(d)] == 0) {
        lo.push_back(node);
        lines.push_back(node);
        hi.push_back(node + (n - 1) * strides_[static_cast<std::size_t>(d)]);
      }
    }
  }
}

void apply_derivative(const SbpOperators& op, const TensorIndexMap& map, int dir,
                      std::span<const double> field, int ncomp, std::span<double> out) {
  const std::size_t expected = static_cast<std::size_t>(map.nodes()) * static_cast<std::size_t>(ncomp);
  if (dir < 0 || dir >= map.dim()) throw ShapeMismatch("derivative direction out of range");
  if (map.n() != op.n) throw ShapeMismatch("operator size does not match index map");
  if (field.size() != expected || out.size() != expected) {
    throw ShapeMismatch("field has " + std::to_string(field.size()) + " values, expected " +
                        std::to_string(expected));
  }
  const int n = op.n;
  const int stride = map.stride(dir) * ncomp;
  for (int start : map.line_starts(dir)) {
    const int base = start * ncomp;
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < ncomp; ++c) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += op.D(i, j) * field[static_cast<std::size_t>(base + j * stride + c)];
        out[static_cast<std::size_t>(base + i * stride + c)] = acc;
      }
    }
  }
}

namespace {

void write_matrix(const std::filesystem::path& path, const DenseMatrix& m) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path.string());
  os << std::setprecision(17);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << '\n';
  }
}

}  // namespace

void dump_sbp_csv(const SbpOperators& op, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string tag = "p" + std::to_string(op.p) + "_";
  {
    std::ofstream os(dir / (tag + "nodes_weights.csv"));
    if (!os) throw Error("cannot write operator dump in " + dir.string());
    os << std::setprecision(17) << "node,weight\n";
    for (int i = 0; i < op.n; ++i) os << op.nodes[static_cast<std::size_t>(i)] << ',' << op.P[static_cast<std::size_t>(i)] << '\n';
  }
  write_matrix(dir / (tag + "Q.csv"), op.Q);
  write_matrix(dir / (tag + "D.csv"), op.D);
  write_matrix(dir / (tag + "Delta.csv"), op.Delta);
  write_matrix(dir / (tag + "I_stof.csv"), op.I_stof);
}

}  // namespace esdg
