#include "sabmis/lasso_admm.hpp"

#include <cmath>
#include <stdexcept>

namespace sabmis {

FactorHandle::FactorHandle(Eigen::MatrixXd phi, double rho)
    : phi_(std::move(phi)), rho_(rho) {
  if (rho <= 0.0) throw std::invalid_argument("prefactor: rho must be positive");
  const Eigen::Index n = phi_.cols();
  Eigen::MatrixXd gram = phi_.transpose() * phi_;
  gram.diagonal().array() += rho_;
  llt_.compute(gram);
  if (llt_.info() != Eigen::Success)
    throw std::runtime_error("prefactor: Cholesky factorization failed");
}

FactorHandle prefactor(const Eigen::MatrixXd& phi, double rho) {
  return FactorHandle(phi, rho);
}

namespace {

inline double soft_threshold(double v, double k) {
  if (v > k) return v - k;
  if (v < -k) return v + k;
  return 0.0;
}

}  // namespace

SolveResult solve_lasso_gram(const Eigen::VectorXd& q, const FactorHandle& handle,
                             const SolverConfig& cfg) {
  const Eigen::Index n = handle.n();
  if (q.size() != n)
    throw std::invalid_argument("solve_lasso: q length does not match phi columns");
  if (cfg.max_iters < 1 || cfg.abs_tol <= 0.0 || cfg.rel_tol <= 0.0 ||
      cfg.rho <= 0.0 || cfg.lambda <= 0.0)
    throw std::invalid_argument("solve_lasso: config values must be positive");

  const double lambda =
      cfg.adaptive_lambda ? cfg.lambda * q.lpNorm<Eigen::Infinity>() : cfg.lambda;
  const double rho = cfg.rho;
  const double kappa = lambda / rho;
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd z_old(n);

  SolveResult res;
  res.lambda_used = lambda;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    s = handle.llt().solve(q + rho * (z - u));
    z_old = z;
    for (Eigen::Index i = 0; i < n; ++i) z(i) = soft_threshold(s(i) + u(i), kappa);
    u += s - z;

    const double r_norm = (s - z).norm();
    const double d_norm = rho * (z - z_old).norm();
    const double eps_pri = sqrt_n * cfg.abs_tol +
                           cfg.rel_tol * std::max(s.norm(), z.norm());
    const double eps_dual = sqrt_n * cfg.abs_tol + cfg.rel_tol * (rho * u.norm());
    res.iterations = it;
    res.primal_residual = r_norm;
    res.dual_residual = d_norm;
    if (r_norm <= eps_pri && d_norm <= eps_dual) {
      res.converged = true;
      break;
    }
  }
  res.solution = std::move(z);
  return res;
}

SolveResult solve_lasso(const Eigen::VectorXd& y, const FactorHandle& handle,
                        const SolverConfig& cfg) {
  if (y.size() != handle.phi().rows())
    throw std::invalid_argument("solve_lasso: y length does not match phi rows");
  return solve_lasso_gram(handle.phi().transpose() * y, handle, cfg);
}

}  // namespace sabmis
