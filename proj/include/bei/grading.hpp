#pragma once

// Multigradings: column j of the matrix is the degree vector of x_j.

#include <Eigen/Core>

#include "bei/monomial.hpp"
#include "bei/polynomial.hpp"

namespace bei {

class Grading {
 public:
  explicit Grading(Eigen::MatrixXi matrix);

  /// The standard grading: every variable has degree 1.
  static Grading total_degree(std::size_t nvars);

  const Eigen::MatrixXi& matrix() const { return matrix_; }
  Eigen::Index rows() const { return matrix_.rows(); }
  std::size_t nvars() const { return static_cast<std::size_t>(matrix_.cols()); }

 private:
  Eigen::MatrixXi matrix_;
};

Eigen::VectorXi multidegree(const Monomial& m, const Grading& g);

template <class S>
bool is_homogeneous(const Polynomial<S>& f, const Grading& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("grading and polynomial ring differ in size");
  if (f.is_zero()) return true;
  const Eigen::VectorXi first = multidegree(f.leading_monomial(), g);
  for (const auto& t : f.terms()) {
    if (multidegree(t.monomial, g) != first) return false;
  }
  return true;
}

}  // namespace bei
