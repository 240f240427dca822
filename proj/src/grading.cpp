#include "bei/grading.hpp"

namespace bei {

Grading::Grading(Eigen::MatrixXi matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1 || matrix_.cols() < 1) {
    throw std::invalid_argument("grading matrix must be at least 1x1");
  }
}

Grading Grading::total_degree(std::size_t nvars) {
  return Grading(Eigen::MatrixXi::Ones(1, static_cast<Eigen::Index>(nvars)));
}

Eigen::VectorXi multidegree(const Monomial& m, const Grading& g) {
  if (m.nvars() != g.nvars()) throw DimensionError("grading and monomial ring differ in size");
  Eigen::VectorXi u(static_cast<Eigen::Index>(m.nvars()));
  auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) u(static_cast<Eigen::Index>(i)) = e[i];
  return g.matrix() * u;
}

}  // namespace bei
