#pragma once

#include <span>
#include <string>
#include <vector>

#include "retailfail/dataset.hpp"
#include "retailfail/linalg.hpp"

namespace retailfail {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, n - 1 divisor
};

struct ShapiroWilk {
  double w = 0.0;
  double p = 0.0;
};

struct ColumnSummary {
  std::string name;
  std::string label;
  double mean = 0.0;
  double std = 0.0;
  double sw_w = 0.0;
  double sw_p = 0.0;
};

struct CorrelationMatrix {
  std::vector<std::string> labels;
  Matrix r;
};

double mean(std::span<const double> x);

// Throws DomainError when fewer than two values are given.
MeanStd mean_std(std::span<const double> x);

// Royston's AS R94 algorithm: polynomial approximations for the
// coefficients and a normalising transformation of W for the p-value.
// Requires 3 <= n <= 5000 and a non-zero range.
ShapiroWilk shapiro_wilk(std::span<const double> x);

// Throws DomainError on length mismatch, n < 2 or zero variance.
double pearson_corr(std::span<const double> x, std::span<const double> y);

// Variables of the descriptive summary table, in presentation order.
const std::vector<std::string>& summary_columns();

// Columns of the correlation figure, in presentation order.
const std::vector<std::string>& correlation_columns();

// Human-readable label for a column name ("sga_over_rev" -> "SGA/Revenue").
std::string column_label(std::string_view name);

std::vector<ColumnSummary> describe(const Dataset& dataset,
                                    std::span<const std::string> columns,
                                    RatioPolicy policy = RatioPolicy::full);
std::vector<ColumnSummary> describe(const Dataset& dataset,
                                    RatioPolicy policy = RatioPolicy::full);

CorrelationMatrix correlation_matrix(const Dataset& dataset,
                                     std::span<const std::string> columns,
                                     RatioPolicy policy = RatioPolicy::full);
CorrelationMatrix correlation_matrix(const Dataset& dataset,
                                     RatioPolicy policy = RatioPolicy::full);

}  // namespace retailfail
