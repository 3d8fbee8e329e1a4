#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace esdg {

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 7;

/// Row-major dense matrix, sized at construction.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i * cols_), static_cast<std::size_t>(cols_)};
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct LglRule {
  std::vector<double> nodes;    // ascending on [-1, 1]
  std::vector<double> weights;  // positive, sum to 2
};

/// Legendre-Gauss-Lobatto nodes and weights of degree p (p + 1 points).
LglRule lgl_nodes_weights(int p);

/// Diagonal-norm SBP first-derivative operator on the LGL nodes, with the
/// telescoping companions.  P holds the diagonal of the norm matrix.
struct SbpOperators {
  int p = 0;
  int n = 0;  // p + 1
  std::vector<double> nodes;
  std::vector<double> P;
  DenseMatrix Q;        // n x n, Q + Q^T = B
  DenseMatrix D;        // n x n, D = P^{-1} Q
  DenseMatrix B;        // diag(-1, 0, ..., 0, 1)
  DenseMatrix Delta;    // n x (n + 1) first differences
  DenseMatrix I_stof;   // (n + 1) x n, Q = Delta * I_stof
};

SbpOperators build_sbp(int p);

/// Operators are built once per degree and shared read-only afterwards.
const SbpOperators& sbp_operators(int p);

/// Maps (i, j, k) node indices and a field component onto flat storage.
/// Nodes are numbered with the x1 index fastest; the field index is
/// innermost, so an element stores n^dim blocks of ncomp contiguous values.
class TensorIndexMap {
 public:
  TensorIndexMap(int dim, int n);

  int dim() const noexcept { return dim_; }
  int n() const noexcept { return n_; }
  int nodes() const noexcept { return nodes_; }
  int face_nodes_count() const noexcept { return face_nodes_; }
  /// Distance in node units between neighbours along direction d.
  int stride(int d) const noexcept { return strides_[static_cast<std::size_t>(d)]; }

  int node(std::array<int, 3> ijk) const noexcept {
    return ijk[0] + n_ * (ijk[1] + n_ * ijk[2]);
  }
  std::array<int, 3> ijk(int node) const noexcept {
    return {node % n_, (node / n_) % n_, node / (n_ * n_)};
  }
  std::size_t offset(std::size_t element, int node, int field, int ncomp) const noexcept {
    return (element * static_cast<std::size_t>(nodes_) + static_cast<std::size_t>(node)) *
               static_cast<std::size_t>(ncomp) +
           static_cast<std::size_t>(field);
  }

  /// Nodes on the face normal to d; side < 0 is the low face, side > 0 the
  /// high face.  Both sides list nodes in the same transverse order, so
  /// entry k on one element's high face meets entry k on its neighbour's
  /// low face.
  const std::vector<int>& face(int d, int side) const {
    return faces_[static_cast<std::size_t>(2 * d + (side > 0 ? 1 : 0))];
  }

  /// Start nodes of the n^(dim-1) lines running along direction d.
  const std::vector<int>& line_starts(int d) const { return lines_[static_cast<std::size_t>(d)]; }

 private:
  int dim_;
  int n_;
  int nodes_;
  int face_nodes_;
  std::array<int, 3> strides_{};
  std::array<std::vector<int>, 6> faces_;
  std::array<std::vector<int>, 3> lines_;
};

/// Applies the 1D derivative along direction d to every component of an
/// element-local field laid out per TensorIndexMap (reference coordinates).
void apply_derivative(const SbpOperators& op, const TensorIndexMap& map, int dir,
                      std::span<const double> field, int ncomp, std::span<double> out);

/// Writes nodes, P, Q, D, Delta and I_stof as CSV files into dir.
void dump_sbp_csv(const SbpOperators& op, const std::filesystem::path& dir);

}  // namespace esdg
