#include "retailfail/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "retailfail/error.hpp"

namespace retailfail {

namespace {

// Horner evaluation of c[0] + c[1] x + ... + c[k-1] x^(k-1).
template <std::size_t K>
double poly(const double (&c)[K], double x) {
  double r = c[K - 1];
  for (std::size_t i = K - 1; i-- > 0;) r = r * x + c[i];
  return r;
}

constexpr double kC1[] = {0.0, 0.221157, -0.147981, -2.07119, 4.434685, -2.706056};
constexpr double kC2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
constexpr double kC3[] = {0.544, -0.39978, 0.025054, -6.714e-4};
constexpr double kC4[] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double kC5[] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double kC6[] = {-0.4803, -0.082676, 0.0030302};
constexpr double kG[] = {-2.273, 0.459};

// Half of the antisymmetric coefficient vector: a[i] weights
// x_(n-1-i) - x_(i) for i < n/2.
std::vector<double> sw_coefficients(std::size_t n) {
  const std::size_t half = n / 2;
  std::vector<double> a(half);
  if (n == 3) {
    a[0] = std::sqrt(0.5);
    return a;
  }
  const boost::math::normal standard;
  const double an = static_cast<double>(n);
  std::vector<double> m(half);
  double summ2 = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    m[i] = boost::math::quantile(standard, (static_cast<double>(i + 1) - 0.375) / (an + 0.25));
    summ2 += m[i] * m[i];
  }
  summ2 *= 2.0;
  const double ssumm2 = std::sqrt(summ2);
  const double rsn = 1.0 / std::sqrt(an);
  const double a1 = poly(kC1, rsn) - m[0] / ssumm2;

  std::size_t first_scaled;
  double fac;
  if (n > 5) {
    first_scaled = 2;
    const double a2 = -m[1] / ssumm2 + poly(kC2, rsn);
    fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                    (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
    a[1] = a2;
  } else {
    first_scaled = 1;
    fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
  }
  a[0] = a1;
  for (std::size_t i = first_scaled; i < half; ++i) a[i] = -m[i] / fac;
  return a;
}

double sw_pvalue(double w, std::size_t n) {
  if (n == 3) {
    constexpr double pi6 = 1.90985931710274;   // 6 / pi
    constexpr double stqr = 1.04719755119660;  // asin(sqrt(3/4))
    return std::clamp(pi6 * (std::asin(std::sqrt(w)) - stqr), 0.0, 1.0);
  }
  const double an = static_cast<double>(n);
  double y = std::log1p(-w);
  double m;
  double s;
  if (n <= 11) {
    const double gamma = poly(kG, an);
    if (y >= gamma) return 0.0;
    y = -std::log(gamma - y);
    m = poly(kC3, an);
    s = std::exp(poly(kC4, an));
  } else {
    const double xx = std::log(an);
    m = poly(kC5, xx);
    s = std::exp(poly(kC6, xx));
  }
  return boost::math::cdf(boost::math::complement(boost::math::normal(m, s), y));
}

}  // namespace

double mean(std::span<const double> x) {
  if (x.empty()) throw DomainError("mean: empty series");
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

MeanStd mean_std(std::span<const double> x) {
  if (x.size() < 2) throw DomainError("mean_std: at least two values required");
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return {mu, std::sqrt(ss / static_cast<double>(x.size() - 1))};
}

ShapiroWilk shapiro_wilk(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 3 || n > 5000) throw DomainError("shapiro_wilk: n must lie in [3, 5000]");
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  if (!(s.back() - s.front() > 0.0)) throw DomainError("shapiro_wilk: zero-variance series");

  const double mu = mean(s);
  double ss = 0.0;
  for (double v : s) ss += (v - mu) * (v - mu);

  const auto a = sw_coefficients(n);
  double num = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) num += a[i] * (s[n - 1 - i] - s[i]);
  const double w = std::min(1.0, num * num / ss);
  return {w, sw_pvalue(w, n)};
}

double pearson_corr(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("pearson_corr: length mismatch");
  if (x.size() < 2) throw DomainError("pearson_corr: at least two observations required");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) throw DomainError("pearson_corr: zero-variance input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

const std::vector<std::string>& summary_columns() {
  static const std::vector<std::string> cols = {
      "revenue",        "sga",          "cost_of_revenue", "ebitda",          "stores",
      "us_interest_rate", "us_inflation_rate", "acsi",     "long_term_debt",  "pandemic",
      "sga_over_rev",   "cor_over_rev", "ebitda_over_rev", "ltd_over_rev"};
  return cols;
}

const std::vector<std::string>& correlation_columns() {
  static const std::vector<std::string> cols = {
      "year",   "fail",   "revenue",          "cost_of_revenue",   "sga",
      "ebitda", "stores", "us_interest_rate", "us_inflation_rate", "sga_over_rev",
      "cor_over_rev", "long_term_debt", "ebitda_over_rev", "ltd_over_rev", "pandemic",
      "acsi"};
  return cols;
}

std::string column_label(std::string_view name) {
  static const std::pair<std::string_view, std::string_view> labels[] = {
      {"year", "Year"},
      {"fail", "Fail"},
      {"revenue", "Revenue"},
      {"cost_of_revenue", "Cost of revenue"},
      {"sga", "SGA"},
      {"ebitda", "EBITDA"},
      {"stores", "Stores"},
      {"us_interest_rate", "US interest rate"},
      {"us_inflation_rate", "US inflation rate"},
      {"long_term_debt", "Long-term debt"},
      {"pandemic", "Pandemic"},
      {"acsi", "ACSI score"},
      {"sga_over_rev", "SGA/Revenue"},
      {"cor_over_rev", "Cost of revenue/Revenue"},
      {"ebitda_over_rev", "EBITDA/Revenue"},
      {"ltd_over_rev", "Long-term debt/Revenue"},
  };
  for (const auto& [key, label] : labels)
    if (key == name) return std::string(label);
  return std::string(name);
}

std::vector<ColumnSummary> describe(const Dataset& dataset, std::span<const std::string> columns,
                                    RatioPolicy policy) {
  std::vector<ColumnSummary> out;
  out.reserve(columns.size());
  for (const auto& name : columns) {
    const Vector x = dataset.column(name, policy);
    const auto ms = mean_std(x);
    const auto sw = shapiro_wilk(x);
    out.push_back({name, column_label(name), ms.mean, ms.std, sw.w, sw.p});
  }
  return out;
}

std::vector<ColumnSummary> describe(const Dataset& dataset, RatioPolicy policy) {
  return describe(dataset, summary_columns(), policy);
}

CorrelationMatrix correlation_matrix(const Dataset& dataset, std::span<const std::string> columns,
                                     RatioPolicy policy) {
  const std::size_t k = columns.size();
  std::vector<Vector> data;
  data.reserve(k);
  for (const auto& name : columns) data.push_back(dataset.column(name, policy));

  CorrelationMatrix cm;
  cm.labels.assign(columns.begin(), columns.end());
  cm.r = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (dataset.size() < 2 || mean_std(data[i]).std <= 0.0)
      throw DomainError("correlation_matrix: column '" + columns[i] + "' has zero variance");
    cm.r(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) {
      const double r = pearson_corr(data[i], data[j]);
      cm.r(i, j) = r;
      cm.r(j, i) = r;
    }
  }
  return cm;
}

CorrelationMatrix correlation_matrix(const Dataset& dataset, RatioPolicy policy) {
  return correlation_matrix(dataset, correlation_columns(), policy);
}

}  // namespace retailfail
