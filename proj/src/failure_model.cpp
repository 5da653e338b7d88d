#include "retailfail/failure_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "retailfail/distributions.hpp"
#include "retailfail/error.hpp"

namespace retailfail {

std::string_view to_string(ScreenGroup group) {
  switch (group) {
    case ScreenGroup::external: return "external";
    case ScreenGroup::internal: return "internal";
    case ScreenGroup::ratios: return "ratios";
  }
  return "external";
}

ScreenGroup screen_group_from_string(std::string_view name) {
  if (name == "external") return ScreenGroup::external;
  if (name == "internal") return ScreenGroup::internal;
  if (name == "ratios") return ScreenGroup::ratios;
  throw DomainError("unknown screen group '" + std::string(name) +
                    "' (expected external, internal or ratios)");
}

const std::vector<std::string>& screen_predictors(ScreenGroup group) {
  static const std::vector<std::string> external = {"acsi", "pandemic", "us_interest_rate",
                                                    "us_inflation_rate"};
  static const std::vector<std::string> internal = {"revenue", "sga",    "cost_of_revenue",
                                                    "stores",  "ebitda", "long_term_debt"};
  static const std::vector<std::string> ratios = {"sga_over_rev", "cor_over_rev",
                                                  "ebitda_over_rev", "ltd_over_rev"};
  switch (group) {
    case ScreenGroup::external: return external;
    case ScreenGroup::internal: return internal;
    case ScreenGroup::ratios: return ratios;
  }
  return external;
}

const ScreenEntry& ScreenReport::best() const {
  if (fits.empty()) throw DomainError("empty screen report");
  return *std::min_element(fits.begin(), fits.end(), [](const auto& a, const auto& b) {
    return a.fit.aic < b.fit.aic;
  });
}

ScreenReport run_screen(const Dataset& dataset, ScreenGroup group, RatioPolicy policy,
                        const FitOptions& opts) {
  ScreenReport report;
  report.group = group;
  for (const auto& name : screen_predictors(group)) {
    const std::string predictors[] = {name};
    ScreenEntry entry;
    entry.predictor = name;
    entry.fit = fit_logistic(design_matrix(dataset, predictors, policy), opts);
    const auto code = [](double p) {
      return std::isfinite(p) ? std::string(significance_code(p)) : std::string();
    };
    entry.intercept_code = code(entry.fit.p_values[0]);
    entry.slope_code = code(entry.fit.p_values[1]);
    report.fits.push_back(std::move(entry));
  }
  return report;
}

const std::vector<std::string>& final_model_predictors() {
  static const std::vector<std::string> names = {"us_inflation_rate", "ltd_over_rev",
                                                 "ebitda_over_rev"};
  return names;
}

FirthFit fit_final_model(const Dataset& dataset, RatioPolicy policy, const FirthOptions& opts) {
  return fit_firth(design_matrix(dataset, final_model_predictors(), policy), opts);
}

double predict_probability(std::span<const double> beta, const FirmYearRecord& record,
                           RatioPolicy policy) {
  if (beta.size() != 4)
    throw DomainError("predict_probability: expected 4 coefficients, got " +
                      std::to_string(beta.size()));
  const DerivedRatios r = apply_policy(derive_ratios(record), policy);
  const double eta = beta[0] + beta[1] * record.us_inflation_rate + beta[2] * r.ltd_over_rev +
                     beta[3] * r.ebitda_over_rev;
  return inv_logit(eta);
}

const PredictionCell& PredictionTable::at(int year, std::string_view chain) const {
  const auto y = std::find(years.begin(), years.end(), year);
  const auto c = std::find(chains.begin(), chains.end(), chain);
  if (y == years.end() || c == chains.end())
    throw DomainError("no cell for " + std::string(chain) + " " + std::to_string(year));
  return cells[static_cast<std::size_t>(y - years.begin())]
              [static_cast<std::size_t>(c - chains.begin())];
}

PredictionTable probability_table(std::span<const double> beta, const Dataset& dataset,
                                  RatioPolicy policy) {
  PredictionTable table;
  table.chains = dataset.chains();

  int first = dataset.record(0).year;
  int last = first;
  for (const auto& r : dataset.records()) {
    first = std::min(first, r.year);
    last = std::max(last, r.year);
  }
  for (int y = first; y <= last; ++y) table.years.push_back(y);

  table.cells.assign(table.years.size(),
                     std::vector<PredictionCell>(table.chains.size(), PredictionCell::not_available()));
  std::map<std::string, std::size_t> chain_col;
  for (std::size_t c = 0; c < table.chains.size(); ++c) chain_col[table.chains[c]] = c;

  for (const auto& r : dataset.records()) {
    const std::size_t col = chain_col.at(r.chain);
    const std::size_t row = static_cast<std::size_t>(r.year - first);
    table.cells[row][col] = PredictionCell::probability(predict_probability(beta, r, policy));
    if (r.fail == 1)
      for (std::size_t later = row + 1; later < table.years.size(); ++later)
        table.cells[later][col] = PredictionCell::ceased();
  }
  return table;
}

PredictionTable probability_table(const FirthFit& fit, const Dataset& dataset,
                                  RatioPolicy policy) {
  return probability_table(fit.beta, dataset, policy);
}

}  // namespace retailfail
