#pragma once

// Printed reference values, transcribed at their printed precision.
// kLessThan marks a "<0.001" p-value cell.

#include <array>
#include <string_view>

namespace reference {

inline constexpr double kLessThan = -1.0;

struct SummaryRow {
  std::string_view column;
  double mean;
  int mean_decimals;
  double std;
  int std_decimals;
  double w;
  double p;
};

inline constexpr std::array<SummaryRow, 14> kSummary = {{
    {"revenue", 16854.81, 2, 8105.03, 2, 0.945, 0.107},
    {"sga", 4450.66, 2, 1730.76, 2, 0.929, 0.036},
    {"cost_of_revenue", 12301.91, 2, 6545.78, 2, 0.909, 0.011},
    {"ebitda", 191.16, 2, 955.70, 2, 0.934, 0.050},
    {"stores", 1891.81, 2, 1194.25, 2, 0.816, kLessThan},
    {"us_interest_rate", 2.16, 2, 0.58, 2, 0.921, 0.022},
    {"us_inflation_rate", 2.11, 2, 1.85, 2, 0.720, kLessThan},
    {"acsi", 76.31, 2, 3.11, 2, 0.959, 0.257},
    {"long_term_debt", 3475.12, 2, 1680.49, 2, 0.934, 0.049},
    {"pandemic", 0.22, 2, 0.42, 2, 0.512, kLessThan},
    {"sga_over_rev", 0.29, 2, 0.07, 2, 0.938, 0.066},
    {"cor_over_rev", 0.71, 2, 0.7, 1, 0.915, 0.016},  // std: suspected typo
    {"ebitda_over_rev", -0.012, 3, 0.14, 2, 0.625, kLessThan},
    {"ltd_over_rev", 0.30, 2, 0.50, 2, 0.339, kLessThan},
}};

// Same order as retailfail::correlation_columns().
inline constexpr double kCorrelation[16][16] = {
    {1.00, 0.49, -0.39, -0.32, -0.55, -0.31, -0.28, -0.20, 0.67, 0.19, 0.20, -0.18, -0.40, 0.18, 0.75, 0.17},
    {0.49, 1.00, -0.36, -0.28, -0.41, -0.52, -0.24, 0.19, 0.58, 0.50, 0.39, -0.09, -0.73, 0.49, 0.49, 0.05},
    {-0.39, -0.36, 1.00, 0.99, 0.93, 0.11, 0.65, 0.12, -0.11, -0.79, 0.46, 0.38, 0.35, -0.42, -0.21, -0.35},
    {-0.32, -0.28, 0.99, 1.00, 0.90, 0.06, 0.65, 0.11, -0.05, -0.78, 0.56, 0.39, 0.29, -0.38, -0.14, -0.38},
    {-0.55, -0.41, 0.93, 0.90, 1.00, -0.01, 0.48, 0.21, -0.17, -0.58, 0.31, 0.21, 0.32, -0.47, -0.34, -0.28},
    {-0.31, -0.52, 0.11, 0.06, -0.01, 1.00, 0.35, -0.14, -0.48, -0.49, -0.35, 0.26, 0.79, -0.12, -0.39, 0.04},
    {-0.28, -0.24, 0.65, 0.65, 0.48, 0.35, 1.00, -0.01, -0.12, -0.65, 0.34, 0.50, 0.25, -0.19, -0.10, -0.26},
    {-0.20, 0.19, 0.12, 0.11, 0.21, -0.14, -0.01, 1.00, 0.35, -0.03, 0.19, -0.05, 0.01, -0.37, -0.45, 0.08},
    {0.67, 0.58, -0.11, -0.05, -0.17, -0.48, -0.12, 0.35, 1.00, 0.12, 0.32, -0.10, -0.45, -0.09, 0.59, 0.29},
    {0.19, 0.50, -0.79, -0.78, -0.58, -0.49, -0.65, -0.03, 0.12, 1.00, -0.32, -0.46, -0.67, 0.54, 0.20, 0.27},
    {0.20, 0.39, 0.46, 0.56, 0.31, -0.35, 0.34, 0.19, 0.32, -0.32, 1.00, 0.25, -0.24, -0.11, 0.20, -0.43},
    {-0.18, -0.09, 0.38, 0.39, 0.21, 0.26, 0.50, -0.05, -0.10, -0.46, 0.25, 1.00, 0.18, 0.13, -0.02, -0.31},
    {-0.40, -0.73, 0.35, 0.29, 0.32, 0.79, 0.25, 0.01, -0.45, -0.67, -0.24, 0.18, 1.00, -0.57, -0.51, 0.00},
    {0.18, 0.49, -0.42, -0.38, -0.47, -0.12, -0.19, -0.37, -0.09, 0.54, -0.11, 0.13, -0.57, 1.00, 0.32, -0.01},
    {0.75, 0.49, -0.21, -0.14, -0.34, -0.39, -0.10, -0.45, 0.59, 0.20, 0.20, -0.02, -0.51, 0.32, 1.00, 0.04},
    {0.17, 0.05, -0.35, -0.38, -0.28, 0.04, -0.26, 0.08, 0.29, 0.27, -0.43, -0.31, 0.00, -0.01, 0.04, 1.00},
};

struct ScreenColumn {
  std::string_view predictor;
  double intercept, intercept_p, intercept_se;
  double slope, slope_p, slope_se;
  double aic;
  std::string_view intercept_code, slope_code;
};

inline constexpr std::array<ScreenColumn, 4> kExternal = {{
    {"acsi", -6.191, 0.657, 13.947, 0.0555, 0.760, 0.182, 28.017, "", ""},
    {"pandemic", -3.178, 0.0019, 1.021, 2.890, 0.023, 1.275, 21.958, "**", "*"},
    {"us_interest_rate", -4.856, 0.096, 2.918, 1.267, 0.286, 1.187, 26.757, ".", ""},
    {"us_inflation_rate", -3.957, kLessThan, 1.164, 0.708, 0.021, 0.307, 20.349, "***", "*"},
}};

inline constexpr std::array<ScreenColumn, 6> kInternal = {{
    {"revenue", 0.757, 0.583, 1.379, -0.0002, 0.079, 0.0001, 23.039, "", "."},
    {"sga", 3.546, 0.193, 2.725, -0.0015, 0.057, 0.0008, 20.172, "", "."},
    {"cost_of_revenue", -0.114, 0.009, 3.576, -0.00019, 0.154, 0.0001, 25.095, "", ""},
    {"stores", -0.02467, 0.986, 1.376, -0.0013, 0.207, 0.001, 25.277, "", ""},
    {"ebitda", -2.494, 0.0036, 0.858, -0.0022, 0.086, 0.0013, 19.806, "**", "."},
    {"long_term_debt", -1.374, 0.247, 1.186, -0.0002, 0.608, 0.0003, 27.841, "", ""},
}};

inline constexpr std::array<ScreenColumn, 4> kRatios = {{
    {"sga_over_rev", -9.245, 0.009, 3.576, 22.728, 0.028, 10.357, 20.76, "**", "*"},
    {"cor_over_rev", -17.021, 0.043, 8.404, 20.253, 0.064, 10.932, 23.131, "*", "."},
    {"ebitda_over_rev", -3.264, 0.009, 1.259, -41.769, 0.089, 24.599, 13.951, "**", "."},
    {"ltd_over_rev", -3.238, 0.041, 1.584, 4.274, 0.459, 5.768, 23.175, "*", ""},
}};

struct FinalModel {
  std::array<double, 4> beta{-4.349, 0.592, 1.374, -1.606};
  std::array<double, 4> se{1.434, 0.297, 1.057, 4.303};
  std::array<double, 4> chisq{9.207, 3.971, 1.689, 0.139};
  double lr = 13.81581;
  double lr_p = 0.003166889;
  double wald = 12.7042;
};
inline constexpr FinalModel kFinal{};

// Probability grid: years 2013..2022 by chain in dataset order.
// NaN-free encoding: -1 not available, -2 ceased operations.
inline constexpr double kNotAvailable = -1.0;
inline constexpr double kCeased = -2.0;
inline constexpr int kFirstYear = 2013;
inline constexpr std::array<std::string_view, 4> kChains = {"Bed Bath & Beyond", "Rite Aid",
                                                            "Sears Holdings", "JC Penney"};
inline constexpr double kProbability[10][4] = {
    {kNotAvailable, 0.063, 0.042, 0.130},
    {kNotAvailable, 0.054, 0.042, 0.110},
    {0.017, 0.039, 0.019, 0.043},
    {0.033, 0.040, 0.047, 0.072},
    {0.056, 0.063, 0.070, 0.101},
    {0.074, 0.085, 0.162, 0.129},
    {0.059, 0.082, kCeased, 0.103},
    {0.043, 0.056, kCeased, 0.998},
    {0.263, 0.304, kCeased, kCeased},
    {0.884, 0.760, kCeased, kCeased},
};

}  // namespace reference
