#pragma once

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

namespace retailfail {

// P(|Z| > |z|) for a standard normal Z.
inline double normal_two_sided_p(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

// Upper tail of a chi-square(df). df == 0 yields 1.
inline double chi_square_sf(double x, double df) {
  if (df <= 0.0 || x <= 0.0) return 1.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(df), x));
}

// exp(eta) / (1 + exp(eta)) without overflow for large |eta|.
inline double inv_logit(double eta) {
  if (eta >= 0.0) return 1.0 / (1.0 + std::exp(-eta));
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

// log(1 + exp(eta)) without overflow.
inline double log1p_exp(double eta) {
  return eta > 0.0 ? eta + std::log1p(std::exp(-eta)) : std::log1p(std::exp(eta));
}

}  // namespace retailfail
