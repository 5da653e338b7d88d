#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "retailfail/dataset.hpp"
#include "retailfail/firth.hpp"
#include "retailfail/logistic.hpp"

namespace retailfail {

enum class ScreenGroup { external, internal, ratios };

std::string_view to_string(ScreenGroup group);
ScreenGroup screen_group_from_string(std::string_view name);

// Predictors screened for a group, in presentation order.
const std::vector<std::string>& screen_predictors(ScreenGroup group);

struct ScreenEntry {
  std::string predictor;
  MleFit fit;
  std::string intercept_code;
  std::string slope_code;
};

struct ScreenReport {
  ScreenGroup group = ScreenGroup::external;
  std::vector<ScreenEntry> fits;

  // Entry with the smallest AIC.
  const ScreenEntry& best() const;
};

// One univariate logistic fit per predictor of the group.
ScreenReport run_screen(const Dataset& dataset, ScreenGroup group,
                        RatioPolicy policy = RatioPolicy::full, const FitOptions& opts = {});

// Inflation, long-term debt/revenue and EBITDA/revenue, in that order.
const std::vector<std::string>& final_model_predictors();

// Coefficients of the final model as published to three decimals
// (intercept, inflation, debt ratio, EBITDA ratio).
inline constexpr std::array<double, 4> kPublishedFinalCoefficients = {-4.349, 0.592, 1.374,
                                                                      -1.606};

FirthFit fit_final_model(const Dataset& dataset, RatioPolicy policy = RatioPolicy::full,
                         const FirthOptions& opts = {});

// exp(eta) / (1 + exp(eta)) with eta = beta . (1, inflation, ltd/rev, ebitda/rev).
double predict_probability(std::span<const double> beta, const FirmYearRecord& record,
                           RatioPolicy policy = RatioPolicy::full);

struct PredictionCell {
  enum class Kind { probability, not_available, ceased_operations };

  Kind kind = Kind::not_available;
  double value = 0.0;

  static PredictionCell probability(double p) { return {Kind::probability, p}; }
  static PredictionCell not_available() { return {Kind::not_available, 0.0}; }
  static PredictionCell ceased() { return {Kind::ceased_operations, 0.0}; }

  bool is_probability() const noexcept { return kind == Kind::probability; }

  friend bool operator==(const PredictionCell&, const PredictionCell&) = default;
};

// Year x chain grid of failure probabilities.
struct PredictionTable {
  std::vector<int> years;
  std::vector<std::string> chains;
  std::vector<std::vector<PredictionCell>> cells;  // [year][chain]

  // Throws DomainError when the year or chain is not part of the grid.
  const PredictionCell& at(int year, std::string_view chain) const;
};

PredictionTable probability_table(std::span<const double> beta, const Dataset& dataset,
                                  RatioPolicy policy = RatioPolicy::full);
PredictionTable probability_table(const FirthFit& fit, const Dataset& dataset,
                                  RatioPolicy policy = RatioPolicy::full);

inline double odds_ratio(double coef) { return std::exp(coef); }

}  // namespace retailfail
