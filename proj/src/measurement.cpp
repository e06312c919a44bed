#include "sabmis/measurement.hpp"

#include <stdexcept>

#include "sabmis/rng.hpp"

namespace sabmis {

Eigen::MatrixXd generate_matrix(std::uint64_t seed, Eigen::Index p3, Eigen::Index p2) {
  if (p2 < 1 || p3 <= p2)
    throw std::invalid_argument("generate_matrix: require p3 > p2 >= 1");
  Eigen::MatrixXd phi(p3, p2);
  NormalStream normals(seed);
  for (Eigen::Index j = 0; j < p2; ++j)
    for (Eigen::Index i = 0; i < p3; ++i)
      phi(i, j) = normals.next();
  for (Eigen::Index j = 0; j < p2; ++j) {
    const double norm = phi.col(j).norm();
    if (norm == 0.0)
      throw std::runtime_error("generate_matrix: zero column (degenerate stream)");
    phi.col(j) /= norm;
  }
  return phi;
}

Eigen::VectorXd project(const Eigen::VectorXd& head, const Eigen::VectorXd& tail,
                        const Eigen::MatrixXd& phi) {
  if (tail.size() != phi.cols())
    throw std::invalid_argument("project: tail length does not match phi columns");
  Eigen::VectorXd y(head.size() + phi.rows());
  y.head(head.size()) = head;
  y.tail(phi.rows()).noalias() = phi * tail;
  return y;
}

}  // namespace sabmis
