#pragma once

#include <Eigen/Dense>
#include <complex>
#include <type_traits>

namespace qgraph {

using Index = Eigen::Index;
using cxd = std::complex<double>;

/// Scalar field tag carried by serialized objects.
enum class Field { real, complex };

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatrixXd = Eigen::MatrixXd;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXd = Eigen::VectorXd;
using VectorXcd = Eigen::VectorXcd;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr Field field = Field::real;
  static constexpr bool is_complex = false;
  using real_type = double;
};

template <>
struct scalar_traits<cxd> {
  static constexpr Field field = Field::complex;
  static constexpr bool is_complex = true;
  using real_type = double;
};

template <class S>
inline constexpr bool is_complex_v = scalar_traits<S>::is_complex;

template <class S>
inline constexpr Field field_of = scalar_traits<S>::field;

/// Default tolerance for rank/equality decisions.
inline constexpr double kDefaultTol = 1e-10;

inline const char* field_name(Field f) {
  return f == Field::real ? "real" : "complex";
}

/// Promote a real matrix to the scalar type S (identity for complex input).
template <class S>
Matrix<S> promote(const MatrixXd& m) {
  if constexpr (is_complex_v<S>) {
    return m.cast<cxd>();
  } else {
    return m;
  }
}

}  // namespace qgraph
