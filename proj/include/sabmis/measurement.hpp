#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace sabmis {

// Deterministically regenerates the p3 x p2 measurement matrix from a 64-bit
// seed: standard-normal entries drawn from a fixed PRNG stream (see rng.hpp),
// filled in column-major entry order, then every column scaled to unit l2
// norm. Requires p3 > p2 (oversampling). Same seed => same matrix.
Eigen::MatrixXd generate_matrix(std::uint64_t seed, Eigen::Index p3, Eigen::Index p2);

// Projects a split coefficient vector to measurements: the head passes
// through as-is, the tail is measured through phi. Output length is
// head.size() + phi.rows().
Eigen::VectorXd project(const Eigen::VectorXd& head, const Eigen::VectorXd& tail,
                        const Eigen::MatrixXd& phi);

}  // namespace sabmis
