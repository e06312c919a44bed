#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>

namespace sabmis {

// Per-block l1 reconstruction:  minimize (1/2)||phi*s - y||^2 + lambda*||s||_1
// solved with ADMM (variable split s = z, scaled dual u).
struct SolverConfig {
  int max_iters = 500;
  double abs_tol = 1e-4;
  double rel_tol = 1e-2;
  double rho = 1.0;
  // When adaptive_lambda is set (default), lambda is a relative factor and
  // each solve uses lambda * ||phi^T y||_inf as its l1 weight, keeping the
  // shrinkage proportional to the data scale. Otherwise lambda is the
  // absolute weight.
  double lambda = 1e-3;
  bool adaptive_lambda = true;
};

struct SolveResult {
  Eigen::VectorXd solution;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;
  double lambda_used = 0.0;  // the absolute l1 weight this solve ran with
};

// Immutable shared precomputation: Cholesky factor of (phi^T phi + rho*I),
// reused read-only across every block solve (phi is shared by all blocks).
class FactorHandle {
 public:
  FactorHandle(Eigen::MatrixXd phi, double rho);

  const Eigen::MatrixXd& phi() const { return phi_; }
  const Eigen::LLT<Eigen::MatrixXd>& llt() const { return llt_; }
  double rho() const { return rho_; }
  Eigen::Index n() const { return phi_.cols(); }

 private:
  Eigen::MatrixXd phi_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double rho_;
};

FactorHandle prefactor(const Eigen::MatrixXd& phi, double rho);

SolveResult solve_lasso(const Eigen::VectorXd& y, const FactorHandle& handle,
                        const SolverConfig& cfg);

// Same solve taking q = phi^T y directly; batched pipelines compute all q
// vectors in one matrix product. (||q||_inf also drives the adaptive lambda.)
SolveResult solve_lasso_gram(const Eigen::VectorXd& q, const FactorHandle& handle,
                             const SolverConfig& cfg);

}  // namespace sabmis
