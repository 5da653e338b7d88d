#include "retailfail/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "retailfail/descriptive.hpp"
#include "retailfail/distributions.hpp"
#include "retailfail/error.hpp"

namespace retailfail {

namespace {

constexpr double kSaturation = 1e-8;

void check_dims(std::span<const double> beta, const DesignMatrix& dm) {
  if (beta.size() != dm.p())
    throw DomainError("coefficient vector has " + std::to_string(beta.size()) +
                      " entries, design has " + std::to_string(dm.p()) + " columns");
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::string_view to_string(Separation s) {
  switch (s) {
    case Separation::none: return "none";
    case Separation::quasi: return "quasi";
    case Separation::complete: return "complete";
  }
  return "none";
}

Vector linear_predictor(std::span<const double> beta, const DesignMatrix& dm) {
  check_dims(beta, dm);
  return dm.x * beta;
}

Vector fitted_probabilities(std::span<const double> beta, const DesignMatrix& dm) {
  Vector eta = linear_predictor(beta, dm);
  for (double& e : eta) e = inv_logit(e);
  return eta;
}

double log_likelihood(std::span<const double> beta, const DesignMatrix& dm) {
  const Vector eta = linear_predictor(beta, dm);
  double ll = 0.0;
  for (std::size_t i = 0; i < dm.n(); ++i) ll += dm.y[i] * eta[i] - log1p_exp(eta[i]);
  return ll;
}

Vector logistic_score(std::span<const double> beta, const DesignMatrix& dm) {
  const Vector prob = fitted_probabilities(beta, dm);
  Vector u(dm.p(), 0.0);
  for (std::size_t i = 0; i < dm.n(); ++i) {
    const double r = dm.y[i] - prob[i];
    for (std::size_t j = 0; j < dm.p(); ++j) u[j] += dm.x(i, j) * r;
  }
  return u;
}

Matrix fisher_information(std::span<const double> beta, const DesignMatrix& dm) {
  const Vector prob = fitted_probabilities(beta, dm);
  const std::size_t p = dm.p();
  Matrix info(p, p);
  for (std::size_t i = 0; i < dm.n(); ++i) {
    const double w = prob[i] * (1.0 - prob[i]);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k <= j; ++k) info(j, k) += w * dm.x(i, j) * dm.x(i, k);
  }
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k < j; ++k) info(k, j) = info(j, k);
  return info;
}

MleFit fit_logistic(const DesignMatrix& dm, const FitOptions& opts) {
  const std::size_t n = dm.n();
  const std::size_t p = dm.p();
  if (n < p) throw DomainError("fit_logistic: fewer observations than coefficients");
  const auto events = std::count(dm.y.begin(), dm.y.end(), 1.0);
  if (events == 0 || static_cast<std::size_t>(events) == n)
    throw DomainError("fit_logistic: response has a single class");

  MleFit fit;
  fit.labels = dm.labels;
  fit.beta.assign(p, 0.0);
  double ll = log_likelihood(fit.beta, dm);
  std::vector<double> norms;

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    fit.iterations = iter;
    const Vector score = logistic_score(fit.beta, dm);
    Vector step;
    try {
      step = solve_spd(fisher_information(fit.beta, dm), score);
    } catch (const SingularMatrixError&) {
      break;
    }

    Vector next(p);
    double next_ll = 0.0;
    double scale = 1.0;
    for (int h = 0;; ++h) {
      for (std::size_t j = 0; j < p; ++j) next[j] = fit.beta[j] + scale * step[j];
      next_ll = log_likelihood(next, dm);
      if (next_ll >= ll - 1e-12 * std::abs(ll) || h == opts.max_halvings) break;
      scale *= 0.5;
    }
    fit.beta = next;
    ll = next_ll;
    norms.push_back(norm2(fit.beta));

    if (scale * max_abs(step) <= opts.tol &&
        max_abs(logistic_score(fit.beta, dm)) <= opts.score_tol) {
      fit.converged = true;
      break;
    }
  }

  fit.log_lik = ll;
  fit.aic = 2.0 * static_cast<double>(p) - 2.0 * ll;
  if (!fit.converged && norms.size() >= 3) {
    const auto k = norms.size();
    fit.coefficients_growing = norms[k - 1] > norms[k - 2] && norms[k - 2] > norms[k - 3];
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  fit.se.assign(p, nan);
  fit.z.assign(p, nan);
  fit.p_values.assign(p, nan);
  try {
    fit.cov = inverse_spd(fisher_information(fit.beta, dm));
    for (std::size_t j = 0; j < p; ++j) {
      fit.se[j] = std::sqrt(fit.cov(j, j));
      fit.z[j] = fit.beta[j] / fit.se[j];
      fit.p_values[j] = normal_two_sided_p(fit.z[j]);
    }
  } catch (const SingularMatrixError&) {
    fit.cov = Matrix(p, p, nan);
  }
  fit.separation = detect_separation(dm, fit);
  return fit;
}

std::string_view significance_code(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("significance_code: p outside [0, 1]");
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  if (p < 0.1) return ".";
  return " ";
}

Separation detect_separation(const DesignMatrix& dm, const MleFit& fit) {
  check_dims(fit.beta, dm);
  const std::size_t p = dm.p();

  // Coefficients on the standardized scale; the intercept is re-expressed
  // at the column means so uncentred predictors do not inflate it.
  bool divergent = false;
  double centred_intercept = fit.beta[0];
  for (std::size_t j = 1; j < p; ++j) {
    Vector col(dm.n());
    for (std::size_t i = 0; i < dm.n(); ++i) col[i] = dm.x(i, j);
    const auto ms = mean_std(col);
    centred_intercept += fit.beta[j] * ms.mean;
    if (std::abs(fit.beta[j]) * ms.std > kSeparationBound) divergent = true;
  }
  if (std::abs(centred_intercept) > kSeparationBound) divergent = true;

  const Vector prob = fitted_probabilities(fit.beta, dm);
  bool any_saturated = false;
  double worst_residual = 0.0;
  for (std::size_t i = 0; i < dm.n(); ++i) {
    if (std::min(prob[i], 1.0 - prob[i]) < kSaturation) any_saturated = true;
    worst_residual = std::max(worst_residual, std::abs(dm.y[i] - prob[i]));
  }
  if (!fit.converged && fit.coefficients_growing && any_saturated) divergent = true;

  if (!divergent) return Separation::none;
  return worst_residual < 1e-6 ? Separation::complete : Separation::quasi;
}

}  // namespace retailfail
