#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "retailfail/dataset.hpp"
#include "retailfail/linalg.hpp"

namespace retailfail {

enum class Separation { none, quasi, complete };

std::string_view to_string(Separation s);

struct FitOptions {
  int max_iter = 50;
  double tol = 1e-8;        // max absolute coefficient change
  double score_tol = 1e-6;  // max absolute score component
  int max_halvings = 20;
};

// Plain maximum-likelihood logistic fit.
struct MleFit {
  std::vector<std::string> labels;
  Vector beta;
  Vector se;
  Vector z;
  Vector p_values;
  double log_lik = 0.0;
  double aic = 0.0;
  Matrix cov;
  int iterations = 0;
  bool converged = false;
  Separation separation = Separation::none;
  // True when the coefficient norm was still increasing at the last
  // iterations, the signature of a likelihood without a finite maximum.
  bool coefficients_growing = false;
};

Vector linear_predictor(std::span<const double> beta, const DesignMatrix& dm);
Vector fitted_probabilities(std::span<const double> beta, const DesignMatrix& dm);

// Bernoulli log-likelihood sum_i [y_i eta_i - log(1 + exp(eta_i))].
double log_likelihood(std::span<const double> beta, const DesignMatrix& dm);

// Gradient X^T (y - p) of log_likelihood.
Vector logistic_score(std::span<const double> beta, const DesignMatrix& dm);

// Fisher information X^T W X with W = diag(p (1 - p)).
Matrix fisher_information(std::span<const double> beta, const DesignMatrix& dm);

// Newton-Raphson (IRLS) from beta = 0 with step-halving. Throws DomainError
// when n < p or y holds a single class; a fit that does not converge is
// returned with converged == false and a separation diagnosis.
MleFit fit_logistic(const DesignMatrix& dm, const FitOptions& opts = {});

// '***' p < 0.001, '**' p < 0.01, '*' p < 0.05, '.' p < 0.1, else ' '.
std::string_view significance_code(double p);

// Divergence bound on standardized coefficients used by detect_separation.
inline constexpr double kSeparationBound = 15.0;

Separation detect_separation(const DesignMatrix& dm, const MleFit& fit);

}  // namespace retailfail
