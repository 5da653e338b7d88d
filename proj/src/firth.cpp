#include "retailfail/firth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "retailfail/distributions.hpp"
#include "retailfail/error.hpp"
#include "retailfail/logistic.hpp"

namespace retailfail {

namespace {

struct Evaluation {
  Vector prob;
  Vector weight;
  Matrix info;
  Matrix info_lower;  // Cholesky factor of info
};

Evaluation evaluate(std::span<const double> beta, const DesignMatrix& dm) {
  Evaluation ev;
  ev.prob = fitted_probabilities(beta, dm);
  ev.weight.resize(dm.n());
  for (std::size_t i = 0; i < dm.n(); ++i) ev.weight[i] = ev.prob[i] * (1.0 - ev.prob[i]);
  ev.info = fisher_information(beta, dm);
  ev.info_lower = cholesky(ev.info);
  return ev;
}

Vector leverages(const Evaluation& ev, const DesignMatrix& dm) {
  Vector h(dm.n());
  for (std::size_t i = 0; i < dm.n(); ++i) {
    const auto xi = dm.x.row(i);
    const Vector v = cholesky_solve(ev.info_lower, xi);
    h[i] = ev.weight[i] * std::inner_product(xi.begin(), xi.end(), v.begin(), 0.0);
  }
  return h;
}

Vector modified_score(const Evaluation& ev, const DesignMatrix& dm) {
  const Vector h = leverages(ev, dm);
  Vector u(dm.p(), 0.0);
  for (std::size_t i = 0; i < dm.n(); ++i) {
    const double r = dm.y[i] - ev.prob[i] + h[i] * (0.5 - ev.prob[i]);
    for (std::size_t j = 0; j < dm.p(); ++j) u[j] += dm.x(i, j) * r;
  }
  return u;
}

double penalized_from(const Evaluation& ev, std::span<const double> beta, const DesignMatrix& dm) {
  double log_det = 0.0;
  for (std::size_t j = 0; j < dm.p(); ++j) log_det += std::log(ev.info_lower(j, j));
  return log_likelihood(beta, dm) + log_det;  // 0.5 * (2 * sum log L_jj)
}

double penalized_or_neg_inf(std::span<const double> beta, const DesignMatrix& dm) {
  try {
    return penalized_loglik(beta, dm);
  } catch (const SingularMatrixError&) {
    return -std::numeric_limits<double>::infinity();
  }
}

// Newton step -H^{-1} U* over the free coordinates, with H from central
// differences of the analytic modified score. Empty when H is not negative
// definite or cannot be evaluated.
std::optional<Vector> newton_step(const Vector& beta, const Vector& u_free, const DesignMatrix& dm,
                                  std::span<const std::size_t> free) {
  const std::size_t m = free.size();
  Matrix neg_h(m, m);
  try {
    for (std::size_t b = 0; b < m; ++b) {
      const double d = 1e-5 * std::max(1.0, std::abs(beta[free[b]]));
      Vector up = beta, down = beta;
      up[free[b]] += d;
      down[free[b]] -= d;
      const Vector su = modified_score(evaluate(up, dm), dm);
      const Vector sd = modified_score(evaluate(down, dm), dm);
      for (std::size_t a = 0; a < m; ++a) neg_h(a, b) = -(su[free[a]] - sd[free[a]]) / (2.0 * d);
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < a; ++b) neg_h(a, b) = neg_h(b, a) = 0.5 * (neg_h(a, b) + neg_h(b, a));
    return solve_spd(neg_h, u_free);
  } catch (const SingularMatrixError&) {
    return std::nullopt;
  }
}

}  // namespace

double penalized_loglik(std::span<const double> beta, const DesignMatrix& dm) {
  return penalized_from(evaluate(beta, dm), beta, dm);
}

Vector hat_diagonal(std::span<const double> beta, const DesignMatrix& dm) {
  return leverages(evaluate(beta, dm), dm);
}

Vector firth_score(std::span<const double> beta, const DesignMatrix& dm) {
  return modified_score(evaluate(beta, dm), dm);
}

Matrix firth_covariance(std::span<const double> beta, const DesignMatrix& dm,
                        FirthCovariance kind) {
  const Evaluation ev = evaluate(beta, dm);
  if (kind == FirthCovariance::fisher) return inverse_spd(ev.info);

  const Vector h = leverages(ev, dm);
  const std::size_t p = dm.p();
  Matrix aug(p, p);
  for (std::size_t i = 0; i < dm.n(); ++i) {
    const double w = ev.weight[i] * (1.0 + h[i]);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k <= j; ++k) aug(j, k) += w * dm.x(i, j) * dm.x(i, k);
  }
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k < j; ++k) aug(k, j) = aug(j, k);
  return inverse_spd(aug);
}

PenalizedSolution maximize_penalized(const DesignMatrix& dm, std::span<const std::size_t> free,
                                     std::span<const double> start, const FirthOptions& opts) {
  if (start.size() != dm.p()) throw DomainError("maximize_penalized: start has wrong length");
  for (auto j : free)
    if (j >= dm.p()) throw DomainError("maximize_penalized: free index out of range");

  PenalizedSolution sol;
  sol.beta.assign(start.begin(), start.end());
  Evaluation ev = evaluate(sol.beta, dm);
  double current = penalized_from(ev, sol.beta, dm);

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    sol.iterations = iter;
    const Vector u = modified_score(ev, dm);
    Vector u_free(free.size());
    for (std::size_t a = 0; a < free.size(); ++a) u_free[a] = u[free[a]];
    Vector step = solve_spd(submatrix(ev.info, free), u_free);

    Vector next = sol.beta;
    double next_value = current;
    double scale = 1.0;
    const double floor = current - 1e-12 * std::abs(current);
    // Fisher scoring alone converges linearly and can oscillate slowly near
    // quasi-separation; try a full Newton step first.
    bool accepted = false;
    if (auto newton = newton_step(sol.beta, u_free, dm, free)) {
      for (std::size_t a = 0; a < free.size(); ++a) next[free[a]] = sol.beta[free[a]] + (*newton)[a];
      next_value = penalized_or_neg_inf(next, dm);
      accepted = next_value >= floor;
      if (accepted) step = *newton;
    }
    for (int h = 0; !accepted; ++h) {
      for (std::size_t a = 0; a < free.size(); ++a)
        next[free[a]] = sol.beta[free[a]] + scale * step[a];
      next_value = penalized_or_neg_inf(next, dm);
      accepted = next_value >= floor || h == opts.max_halvings;
      if (!accepted) scale *= 0.5;
    }
    if (!std::isfinite(next_value))
      throw SingularMatrixError("fit_firth: information matrix became singular");

    double max_step = 0.0;
    for (double s : step) max_step = std::max(max_step, std::abs(scale * s));
    sol.beta = next;
    current = next_value;
    ev = evaluate(sol.beta, dm);

    double max_score = 0.0;
    const Vector u_next = modified_score(ev, dm);
    for (auto j : free) max_score = std::max(max_score, std::abs(u_next[j]));
    if (max_step <= opts.tol && max_score <= opts.tol) {
      sol.converged = true;
      break;
    }
  }
  sol.pen_log_lik = current;
  return sol;
}

LrTest lr_test(const FirthFit& full, const DesignMatrix& dm, const FirthOptions& opts) {
  const std::size_t p = dm.p();
  if (full.beta.size() != p) throw DomainError("lr_test: fit does not match design");
  if (p == 1) return {0.0, 0, 1.0};

  double null_value;
  if (opts.null_model == FirthNullModel::restricted) {
    const std::size_t intercept[] = {0};
    const Vector start(p, 0.0);
    null_value = maximize_penalized(dm, intercept, start, opts).pen_log_lik;
  } else {
    DesignMatrix null_dm;
    null_dm.y = dm.y;
    null_dm.x = Matrix(dm.n(), 1, 1.0);
    null_dm.labels = {dm.labels.front()};
    const std::size_t intercept[] = {0};
    const Vector start(1, 0.0);
    null_value = maximize_penalized(null_dm, intercept, start, opts).pen_log_lik;
  }
  LrTest t;
  t.stat = std::max(0.0, 2.0 * (full.pen_log_lik - null_value));
  t.df = static_cast<int>(p) - 1;
  t.p = chi_square_sf(t.stat, t.df);
  return t;
}

FirthFit fit_firth(const DesignMatrix& dm, const FirthOptions& opts) {
  const std::size_t n = dm.n();
  const std::size_t p = dm.p();
  if (n < p) throw DomainError("fit_firth: fewer observations than coefficients");

  std::vector<std::size_t> all(p);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const Vector start(p, 0.0);
  // Singular designs (constant or collinear columns) fail here, at beta = 0.
  const PenalizedSolution sol = maximize_penalized(dm, all, start, opts);

  FirthFit fit;
  fit.labels = dm.labels;
  fit.beta = sol.beta;
  fit.pen_log_lik = sol.pen_log_lik;
  fit.iterations = sol.iterations;
  fit.converged = sol.converged;

  fit.cov = firth_covariance(fit.beta, dm, opts.covariance);
  fit.se.resize(p);
  fit.chisq.resize(p);
  fit.p_values.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    fit.se[j] = std::sqrt(fit.cov(j, j));
    fit.chisq[j] = (fit.beta[j] / fit.se[j]) * (fit.beta[j] / fit.se[j]);
    fit.p_values[j] = chi_square_sf(fit.chisq[j], 1.0);
  }

  const LrTest lr = lr_test(fit, dm, opts);
  fit.lr_stat = lr.stat;
  fit.lr_df = lr.df;
  fit.lr_p = lr.p;
  fit.null_pen_log_lik = fit.pen_log_lik - 0.5 * lr.stat;

  fit.wald_df = static_cast<int>(p) - 1;
  if (p > 1) {
    std::vector<std::size_t> idx = all;
    if (opts.wald_scope == WaldScope::slopes) idx.erase(idx.begin());
    Vector b(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) b[a] = fit.beta[idx[a]];
    const Vector v = solve_spd(submatrix(fit.cov, idx), b);
    fit.wald_stat = std::inner_product(b.begin(), b.end(), v.begin(), 0.0);
    fit.wald_p = chi_square_sf(fit.wald_stat, fit.wald_df);
  }
  return fit;
}

}  // namespace retailfail
