#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qgraph/errors.hpp"
#include "qgraph/scalar.hpp"

namespace qgraph {

namespace detail {

/// Numerical rank cutoff: max(rows, cols) * eps * sigma_max, the usual
/// rank-revealing convention. An explicit cutoff > 0 overrides it.
inline double rank_cutoff(Index rows, Index cols, double sigma_max, double override_cutoff) {
  if (override_cutoff > 0.0) return override_cutoff;
  const double eps = std::numeric_limits<double>::epsilon();
  return static_cast<double>(std::max(rows, cols)) * eps * sigma_max;
}

}  // namespace detail

/// A linear subspace of K^n held as an orthonormal column basis.
///
/// The basis is produced by rank-revealing SVD, so all derived operations
/// (complement, intersection, preimage) make their rank decisions against
/// singular values. `tol()` governs equality and membership tests; the
/// orthonormalization cutoff is the scaled machine epsilon unless overridden.
template <class S>
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0), tol_(kDefaultTol) {}

  static Subspace zero(Index ambient, double tol = kDefaultTol) {
    return Subspace(ambient, Matrix<S>::Zero(ambient, 0), tol, internal_tag{});
  }

  static Subspace full(Index ambient, double tol = kDefaultTol) {
    return Subspace(ambient, Matrix<S>::Identity(ambient, ambient), tol, internal_tag{});
  }

  /// Span of the columns of `span`, orthonormalized by SVD.
  static Subspace from_span(const Matrix<S>& span, double tol = kDefaultTol,
                            double rank_cutoff = 0.0) {
    if (span.cols() == 0) return zero(span.rows(), tol);
    Eigen::JacobiSVD<Matrix<S>> svd(span, Eigen::ComputeThinU);
    const double cutoff =
        detail::rank_cutoff(span.rows(), span.cols(), svd.singularValues()(0), rank_cutoff);
    Index rank = 0;
    for (Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > cutoff) ++rank;
    }
    return Subspace(span.rows(), svd.matrixU().leftCols(rank), tol, internal_tag{});
  }

  /// Wrap a matrix that is already orthonormal (validated).
  static Subspace from_orthonormal(Matrix<S> basis, double tol = kDefaultTol) {
    const Index n = basis.rows();
    const Index k = basis.cols();
    if (k > n) throw input_error("Subspace: more basis columns than ambient dimension");
    if (k > 0) {
      const double err = (basis.adjoint() * basis - Matrix<S>::Identity(k, k)).norm();
      if (err > std::max(tol, 1e-12 * static_cast<double>(k)))
        throw input_error("Subspace: basis columns are not orthonormal (residual " +
                          std::to_string(err) + ")");
    }
    return Subspace(n, std::move(basis), tol, internal_tag{});
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }
  double tol() const { return tol_; }

  /// Orthogonal projector B B†.
  Matrix<S> projector() const {
    if (dim() == 0) return Matrix<S>::Zero(ambient_, ambient_);
    return basis_ * basis_.adjoint();
  }

  Subspace complement() const {
    if (dim() == 0) return full(ambient_, tol_);
    if (dim() == ambient_) return zero(ambient_, tol_);
    // Full SVD of the basis: the trailing left singular vectors span the
    // orthogonal complement.
    Eigen::JacobiSVD<Matrix<S>> svd(basis_, Eigen::ComputeFullU);
    return Subspace(ambient_, svd.matrixU().rightCols(ambient_ - dim()), tol_, internal_tag{});
  }

  /// Residual of v against the subspace, relative to ‖v‖.
  double residual(const Vector<S>& v) const {
    const double nv = v.norm();
    if (nv == 0.0) return 0.0;
    if (dim() == 0) return 1.0;
    return (v - basis_ * (basis_.adjoint() * v)).norm() / nv;
  }

  bool contains_vector(const Vector<S>& v) const { return residual(v) <= tol_; }

  /// max_i ‖(I - P_this) b_i‖ over the columns of other's basis; 0 when
  /// other ⊆ this. Accurate for small angles (no 1-cos cancellation).
  double containment_residual(const Subspace& other) const {
    if (other.dim() == 0) return 0.0;
    Matrix<S> r = other.basis_;
    if (dim() > 0) r -= basis_ * (basis_.adjoint() * other.basis_);
    double worst = 0.0;
    for (Index j = 0; j < r.cols(); ++j) worst = std::max(worst, r.col(j).norm());
    return worst;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("Subspace: ambient dimension mismatch");
    if (other.dim() > dim()) return false;
    return containment_residual(other) <= std::max(tol_, other.tol_);
  }

  /// Symmetric gap: the larger of the two containment residuals. For equal
  /// dimensions this equals the sine of the largest principal angle.
  double distance(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("Subspace: ambient dimension mismatch");
    return std::max(containment_residual(other), other.containment_residual(*this));
  }

  bool equals(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("Subspace: ambient dimension mismatch");
    return dim() == other.dim() && distance(other) <= std::max(tol_, other.tol_);
  }

  /// Principal angles (radians, ascending) between this and other.
  std::vector<double> principal_angles(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("Subspace: ambient dimension mismatch");
    const Index k = std::min(dim(), other.dim());
    if (k == 0) return {};
    Matrix<S> overlap = basis_.adjoint() * other.basis_;
    Eigen::JacobiSVD<Matrix<S>> svd(overlap);
    std::vector<double> angles(static_cast<size_t>(k));
    for (Index i = 0; i < k; ++i) {
      const double c = std::min(1.0, svd.singularValues()(i));
      angles[static_cast<size_t>(k - 1 - i)] = std::acos(c);
    }
    return angles;
  }

  Subspace with_tol(double tol) const { return Subspace(ambient_, basis_, tol, internal_tag{}); }

 private:
  struct internal_tag {};
  Subspace(Index ambient, Matrix<S> basis, double tol, internal_tag)
      : ambient_(ambient), basis_(std::move(basis)), tol_(tol) {}

  Index ambient_;
  Matrix<S> basis_;
  double tol_;

  template <class T>
  friend Subspace<T> kernel(const Matrix<T>&, double, double);
};

/// Null space of a matrix, via full SVD of its rows.
template <class S>
Subspace<S> kernel(const Matrix<S>& a, double tol = kDefaultTol, double rank_cutoff = 0.0) {
  const Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Subspace<S>::full(n, tol);
  Eigen::JacobiSVD<Matrix<S>> svd(a, Eigen::ComputeFullV);
  const double cutoff = detail::rank_cutoff(a.rows(), n, svd.singularValues()(0), rank_cutoff);
  Index rank = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > cutoff) ++rank;
  }
  return Subspace<S>(n, svd.matrixV().rightCols(n - rank), tol,
                     typename Subspace<S>::internal_tag{});
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw input_error("Subspace sum: ambient dimension mismatch");
  Matrix<S> stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), b.basis();
  return Subspace<S>::from_span(stacked, std::max(a.tol(), b.tol()));
}

/// Intersection as the complement of the sum of complements.
template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  return sum(a.complement(), b.complement()).complement().with_tol(std::max(a.tol(), b.tol()));
}

/// Preimage F^{-1}(V) = ker((I - P_V) F).
template <class S>
Subspace<S> preimage(const Matrix<S>& f, const Subspace<S>& v) {
  if (f.rows() != v.ambient_dim())
    throw input_error("Subspace preimage: map range does not match ambient dimension");
  Matrix<S> reduced = f - v.basis() * (v.basis().adjoint() * f);
  return kernel<S>(reduced, v.tol());
}

template <class S>
Subspace<S> image(const Matrix<S>& f, const Subspace<S>& u) {
  if (f.cols() != u.ambient_dim())
    throw input_error("Subspace image: map domain does not match ambient dimension");
  if (u.dim() == 0) return Subspace<S>::zero(f.rows(), u.tol());
  return Subspace<S>::from_span(f * u.basis(), u.tol());
}

/// Coordinates of U inside a parent subspace containing it: the subspace of
/// K^{dim parent} spanned by B_parent† B_U.
template <class S>
Subspace<S> coordinates_in(const Subspace<S>& parent, const Subspace<S>& u) {
  if (!parent.contains(u))
    throw invariant_error("coordinates_in: subspace is not contained in the parent");
  if (u.dim() == 0) return Subspace<S>::zero(parent.dim(), u.tol());
  return Subspace<S>::from_span(parent.basis().adjoint() * u.basis(), u.tol());
}

}  // namespace qgraph
