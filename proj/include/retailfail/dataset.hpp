#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "retailfail/linalg.hpp"

namespace retailfail {

// One chain-year observation. Money fields are millions of USD, rates are
// percentage points.
struct FirmYearRecord {
  std::string chain;
  int year = 0;
  int fail = 0;
  double revenue = 0.0;
  double cost_of_revenue = 0.0;
  double sga = 0.0;
  double ebitda = 0.0;
  int stores = 0;
  double us_interest_rate = 0.0;
  double us_inflation_rate = 0.0;
  double long_term_debt = 0.0;
  int pandemic = 0;
  double acsi = 0.0;

  friend bool operator==(const FirmYearRecord&, const FirmYearRecord&) = default;
};

struct DerivedRatios {
  double sga_over_rev = 0.0;
  double cor_over_rev = 0.0;
  double ebitda_over_rev = 0.0;
  double ltd_over_rev = 0.0;

  friend bool operator==(const DerivedRatios&, const DerivedRatios&) = default;
};

// How the four revenue ratios are materialised when a column is requested.
//   full       raw field / revenue at double precision
//   printed    every ratio rounded to 2 decimals, as tabulated in the source
//   published  SGA and cost-of-revenue ratios rounded to 2 decimals, debt and
//              EBITDA ratios at full precision; this mix reproduces the
//              published descriptive, correlation and screening tables
enum class RatioPolicy { full, printed, published };

std::string_view to_string(RatioPolicy policy);
RatioPolicy ratio_policy_from_string(std::string_view name);

DerivedRatios derive_ratios(const FirmYearRecord& record);
DerivedRatios apply_policy(const DerivedRatios& ratios, RatioPolicy policy);

// Canonical CSV header, in column order.
inline constexpr std::string_view kCsvHeader =
    "chain,year,fail,revenue,cost_of_revenue,sga,ebitda,stores,"
    "us_interest_rate,us_inflation_rate,long_term_debt,pandemic,acsi";

// Immutable, validated, ordered collection of firm-year records.
class Dataset {
 public:
  // Validates every record and chain-level rule; throws ValidationError.
  explicit Dataset(std::vector<FirmYearRecord> records);

  std::size_t size() const noexcept { return records_.size(); }
  const std::vector<FirmYearRecord>& records() const noexcept { return records_; }
  const FirmYearRecord& record(std::size_t i) const { return records_.at(i); }
  const DerivedRatios& ratios(std::size_t i) const { return ratios_.at(i); }

  // Distinct chain identifiers in order of first appearance.
  const std::vector<std::string>& chains() const noexcept { return chains_; }
  std::size_t failures() const;

  // Numeric column by name (raw field or derived ratio).
  Vector column(std::string_view name, RatioPolicy policy = RatioPolicy::full) const;

  // Records of one chain, preserving order.
  Dataset filter_chain(std::string_view chain) const;

  std::string to_csv() const;

  friend bool operator==(const Dataset& a, const Dataset& b) { return a.records_ == b.records_; }

 private:
  std::vector<FirmYearRecord> records_;
  std::vector<DerivedRatios> ratios_;
  std::vector<std::string> chains_;
};

// Every numeric column name accepted by Dataset::column and design_matrix.
const std::vector<std::string>& numeric_column_names();
bool is_ratio_column(std::string_view name);

Dataset parse_dataset(std::string_view csv_text);
Dataset load_dataset(const std::string& path);

// The 32 chain-years of Bed Bath & Beyond, Rite Aid, Sears Holdings and
// J.C. Penney, 2013-2022.
const Dataset& embedded_dataset();

// Response vector plus an intercept-led predictor matrix.
struct DesignMatrix {
  Vector y;
  Matrix x;
  std::vector<std::string> labels;

  std::size_t n() const noexcept { return y.size(); }
  std::size_t p() const noexcept { return x.cols(); }
};

DesignMatrix design_matrix(const Dataset& dataset, std::span<const std::string> predictors,
                           RatioPolicy policy = RatioPolicy::full);

// Builds a design from raw arrays; the intercept column is prepended.
DesignMatrix make_design(Vector y, const std::vector<Vector>& columns,
                         std::vector<std::string> labels);

}  // namespace retailfail
