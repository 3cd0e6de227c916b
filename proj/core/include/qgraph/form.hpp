#pragma once

#include <string>

#include "qgraph/errors.hpp"
#include "qgraph/scalar.hpp"
#include "qgraph/subspace.hpp"

namespace qgraph {

enum class FormKind { general, symmetric, skew_symmetric };

/// Sesquilinear form w(x, y) = y† G x: linear in the first argument,
/// conjugate-linear in the second. The Gram matrix G fully determines it.
template <class S>
class SesquilinearForm {
 public:
  SesquilinearForm() = default;
  explicit SesquilinearForm(Matrix<S> gram, FormKind kind = FormKind::general,
                            double tol = kDefaultTol)
      : gram_(std::move(gram)), kind_(kind) {
    if (gram_.rows() != gram_.cols())
      throw input_error("SesquilinearForm: Gram matrix must be square");
    validate(tol);
  }

  Index dim() const { return gram_.rows(); }
  const Matrix<S>& gram() const { return gram_; }
  FormKind kind() const { return kind_; }

  S eval(const Vector<S>& x, const Vector<S>& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw input_error("SesquilinearForm::eval: vector size mismatch");
    return (y.adjoint() * gram_ * x)(0, 0);
  }

  void validate(double tol) const {
    const double scale = std::max(1.0, gram_.norm());
    if (kind_ == FormKind::symmetric && (gram_ - gram_.adjoint()).norm() > tol * scale)
      throw invariant_error("SesquilinearForm: declared symmetric but G† != G");
    if (kind_ == FormKind::skew_symmetric && (gram_ + gram_.adjoint()).norm() > tol * scale)
      throw invariant_error("SesquilinearForm: declared skew-symmetric but G† != -G");
  }

  /// Standard skew-symmetric (symplectic) form on K^h ⊕ K^h:
  /// w((x,y),(u,v)) = <x,v> - <y,u>.
  static SesquilinearForm standard_skew(Index h) {
    Matrix<S> g = Matrix<S>::Zero(2 * h, 2 * h);
    g.topRightCorner(h, h) = -Matrix<S>::Identity(h, h);
    g.bottomLeftCorner(h, h) = Matrix<S>::Identity(h, h);
    return SesquilinearForm(std::move(g), FormKind::skew_symmetric);
  }

  /// Standard symmetric form on K^h ⊕ K^h: w((x,y),(u,v)) = <x,v> + <y,u>.
  static SesquilinearForm standard_symmetric(Index h) {
    Matrix<S> g = Matrix<S>::Zero(2 * h, 2 * h);
    g.topRightCorner(h, h) = Matrix<S>::Identity(h, h);
    g.bottomLeftCorner(h, h) = Matrix<S>::Identity(h, h);
    return SesquilinearForm(std::move(g), FormKind::symmetric);
  }

  /// Standard unitary form on K^{n1} ⊕ K^{n2}: w((x,y),(u,v)) = <x,u> - <y,v>.
  static SesquilinearForm standard_unitary(Index n1, Index n2) {
    Matrix<S> g = Matrix<S>::Zero(n1 + n2, n1 + n2);
    g.topLeftCorner(n1, n1) = Matrix<S>::Identity(n1, n1);
    g.bottomRightCorner(n2, n2) = -Matrix<S>::Identity(n2, n2);
    return SesquilinearForm(std::move(g), FormKind::symmetric);
  }

  /// Plain inner product, G = I.
  static SesquilinearForm inner_product(Index n) {
    return SesquilinearForm(Matrix<S>::Identity(n, n), FormKind::symmetric);
  }

 private:
  Matrix<S> gram_;
  FormKind kind_ = FormKind::general;
};

/// w-orthogonal complement U^{⊥w} = {x : w(x, u) = 0 for all u in U},
/// computed as ker(B_U† G).
template <class S>
Subspace<S> form_orthogonal_complement(const Subspace<S>& u, const SesquilinearForm<S>& w) {
  if (u.ambient_dim() != w.dim())
    throw input_error("form_orthogonal_complement: dimension mismatch");
  if (u.dim() == 0) return Subspace<S>::full(u.ambient_dim(), u.tol());
  Matrix<S> rows = u.basis().adjoint() * w.gram();
  return kernel<S>(rows, u.tol());
}

template <class S>
bool is_self_orthogonal(const Subspace<S>& u, const SesquilinearForm<S>& w) {
  return form_orthogonal_complement(u, w).equals(u);
}

/// The form restricted to a subspace, expressed in that subspace's
/// orthonormal coordinates: G_rest = B† G B.
template <class S>
SesquilinearForm<S> restrict_form(const SesquilinearForm<S>& w, const Subspace<S>& sub) {
  if (sub.ambient_dim() != w.dim()) throw input_error("restrict_form: dimension mismatch");
  return SesquilinearForm<S>(sub.basis().adjoint() * w.gram() * sub.basis(), FormKind::general);
}

}  // namespace qgraph
