#pragma once

// Firth penalized maximum-likelihood logistic regression: the log-likelihood
// is augmented by half the log-determinant of the Fisher information
// (Jeffreys prior), which keeps estimates finite under separation.

#include <span>
#include <string>
#include <vector>

#include "retailfail/dataset.hpp"
#include "retailfail/linalg.hpp"

namespace retailfail {

// Variance estimate reported with the coefficients.
//   augmented  inverse of X^T diag(w (1 + h)) X, the information of the
//              pseudo-data formulation (logistf's reported variance)
//   fisher     inverse of X^T diag(w) X, the unpenalized Fisher information
enum class FirthCovariance { augmented, fisher };

// Null model of the likelihood-ratio test.
//   restricted      slopes fixed at zero inside the full design, so the
//                   penalty still uses the full information matrix
//   intercept_only  separate penalized fit of an intercept-only design
enum class FirthNullModel { restricted, intercept_only };

// Coefficients entering the global Wald statistic. The degrees of freedom
// are p - 1 in both cases.
enum class WaldScope { all_coefficients, slopes };

struct FirthOptions {
  int max_iter = 100;
  double tol = 1e-8;
  int max_halvings = 10;
  FirthCovariance covariance = FirthCovariance::augmented;
  FirthNullModel null_model = FirthNullModel::restricted;
  WaldScope wald_scope = WaldScope::all_coefficients;
};

struct FirthFit {
  std::vector<std::string> labels;
  Vector beta;
  Vector se;
  Vector chisq;     // (beta / se)^2
  Vector p_values;  // chi-square(1) upper tail
  Matrix cov;
  double pen_log_lik = 0.0;
  double null_pen_log_lik = 0.0;
  double lr_stat = 0.0;
  int lr_df = 0;
  double lr_p = 1.0;
  double wald_stat = 0.0;
  int wald_df = 0;
  double wald_p = 1.0;
  int iterations = 0;
  bool converged = false;
};

struct LrTest {
  double stat = 0.0;
  int df = 0;
  double p = 1.0;
};

// l(beta) + 0.5 log det I(beta). Throws SingularMatrixError when I(beta)
// is not positive definite.
double penalized_loglik(std::span<const double> beta, const DesignMatrix& dm);

// Diagonal of W^1/2 X (X^T W X)^-1 X^T W^1/2.
Vector hat_diagonal(std::span<const double> beta, const DesignMatrix& dm);

// Modified score sum_i x_i (y_i - p_i + h_i (1/2 - p_i)), the gradient of
// penalized_loglik.
Vector firth_score(std::span<const double> beta, const DesignMatrix& dm);

Matrix firth_covariance(std::span<const double> beta, const DesignMatrix& dm,
                        FirthCovariance kind);

struct PenalizedSolution {
  Vector beta;
  double pen_log_lik = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Maximises the penalized likelihood over the coefficients listed in
// `free`; the others stay at their value in `start`.
PenalizedSolution maximize_penalized(const DesignMatrix& dm, std::span<const std::size_t> free,
                                     std::span<const double> start, const FirthOptions& opts = {});

FirthFit fit_firth(const DesignMatrix& dm, const FirthOptions& opts = {});

// Penalized likelihood-ratio test of all slopes against the null model
// selected in opts.
LrTest lr_test(const FirthFit& full, const DesignMatrix& dm, const FirthOptions& opts = {});

}  // namespace retailfail
