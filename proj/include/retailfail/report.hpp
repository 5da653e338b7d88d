#pragma once

// Report documents: tables of atomic cells rendered as markdown, CSV or
// JSON. Numbers are held at full precision and rounded only when rendered.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retailfail/dataset.hpp"
#include "retailfail/descriptive.hpp"
#include "retailfail/failure_model.hpp"
#include "retailfail/firth.hpp"

namespace retailfail {

enum class ReportFormat { markdown, csv, json };

std::string_view to_string(ReportFormat format);
ReportFormat report_format_from_string(std::string_view name);

// Rounding class of a numeric cell.
//   coefficient  3 decimals, or 3 significant digits below 0.01
//   p_value      3 decimals, "<0.001" below 0.001
//   statistic    3 decimals
//   probability  3 decimals
//   correlation  2 decimals
//   descriptive  2 decimals, 3 below 1 in magnitude
//   integer      no decimals
enum class NumberStyle { coefficient, p_value, statistic, probability, correlation, descriptive,
                         integer };

struct Cell {
  std::optional<double> number;
  NumberStyle style = NumberStyle::statistic;
  std::string text;

  static Cell num(double v, NumberStyle s) { return {v, s, {}}; }
  static Cell str(std::string s) { return {std::nullopt, NumberStyle::statistic, std::move(s)}; }
};

// Presentation string for a number; the JSON emitter parses this same
// string back, so every format shows the identical rounded value.
std::string format_number(double v, NumberStyle style);

struct Section {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
};

struct ReportMeta {
  std::size_t n = 0;
  std::size_t chains = 0;
  std::size_t failures = 0;
};

struct ReportDocument {
  std::string title = "Retail chain failure report";
  std::vector<Section> sections;
  std::optional<ReportMeta> meta;
};

ReportMeta meta_for(const Dataset& dataset);

// Deterministic: identical documents render to identical bytes.
std::string render(const ReportDocument& doc, ReportFormat format);

Section summary_section(const std::vector<ColumnSummary>& rows);
Section correlation_section(const CorrelationMatrix& cm);
Section screen_section(const ScreenReport& report);
Section final_model_section(const FirthFit& fit, std::size_t n);
Section probability_section(const PredictionTable& table, std::string_view coefficient_source);
Section prediction_cell_section(std::string_view chain, int year, const PredictionCell& cell,
                                std::string_view coefficient_source);

}  // namespace retailfail
