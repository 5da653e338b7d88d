#include "retailfail/report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "retailfail/error.hpp"

namespace retailfail {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  // "-0.00" and friends print as zero.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string cell_text(const Cell& c) {
  return c.number ? format_number(*c.number, c.style) : c.text;
}

std::string md_escape(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_markdown(const ReportDocument& doc) {
  std::string out = "# " + doc.title + "\n";
  for (const auto& s : doc.sections) {
    out += "\n## " + s.title + "\n\n|";
    for (const auto& c : s.columns) out += " " + md_escape(c) + " |";
    out += "\n|";
    for (std::size_t i = 0; i < s.columns.size(); ++i) out += i == 0 ? "---|" : "---:|";
    out += "\n";
    for (const auto& row : s.rows) {
      out += "|";
      for (const auto& c : row) out += " " + md_escape(cell_text(c)) + " |";
      out += "\n";
    }
    if (!s.notes.empty()) {
      out += "\n";
      for (const auto& n : s.notes) out += n + "\n";
    }
  }
  return out;
}

std::string render_csv(const ReportDocument& doc) {
  std::string out = "# " + doc.title + "\n";
  for (const auto& s : doc.sections) {
    out += "\n# " + s.title + "\n";
    for (std::size_t i = 0; i < s.columns.size(); ++i)
      out += (i ? "," : "") + csv_field(s.columns[i]);
    out += "\n";
    for (const auto& row : s.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(cell_text(row[i]));
      out += "\n";
    }
    for (const auto& n : s.notes) out += "# " + n + "\n";
  }
  return out;
}

std::string render_json(const ReportDocument& doc) {
  using json = nlohmann::ordered_json;
  json root;
  root["schema_version"] = 1;
  root["title"] = doc.title;
  json sections = json::array();
  for (const auto& s : doc.sections) {
    json js;
    js["title"] = s.title;
    js["columns"] = s.columns;
    json rows = json::array();
    for (const auto& row : s.rows) {
      json jr = json::array();
      for (const auto& c : row) {
        const std::string text = cell_text(c);
        if (c.number && std::isfinite(*c.number) && text.front() != '<')
          jr.push_back(std::stod(text));
        else
          jr.push_back(text);
      }
      rows.push_back(std::move(jr));
    }
    js["rows"] = std::move(rows);
    js["notes"] = s.notes;
    sections.push_back(std::move(js));
  }
  root["sections"] = std::move(sections);
  if (doc.meta) {
    root["meta"] = {{"n", doc.meta->n}, {"chains", doc.meta->chains},
                    {"failures", doc.meta->failures}};
  }
  return root.dump(2) + "\n";
}

Cell code_cell(double p) {
  return Cell::str(std::isfinite(p) ? std::string(significance_code(p)) : std::string("NA"));
}

}  // namespace

std::string_view to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::markdown: return "markdown";
    case ReportFormat::csv: return "csv";
    case ReportFormat::json: return "json";
  }
  return "markdown";
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "markdown") return ReportFormat::markdown;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw DomainError("unknown report format '" + std::string(name) + "'");
}

std::string format_number(double v, NumberStyle style) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  switch (style) {
    case NumberStyle::coefficient: {
      const double a = std::abs(v);
      if (a >= 0.01 || a == 0.0) return fixed(v, 3);
      const int decimals = 2 - static_cast<int>(std::floor(std::log10(a)));
      return fixed(v, decimals);
    }
    case NumberStyle::p_value:
      return v < 0.001 ? "<0.001" : fixed(v, 3);
    case NumberStyle::statistic:
    case NumberStyle::probability:
      return fixed(v, 3);
    case NumberStyle::correlation:
      return fixed(v, 2);
    case NumberStyle::descriptive:
      return fixed(v, std::abs(v) < 1.0 ? 3 : 2);
    case NumberStyle::integer:
      return fixed(v, 0);
  }
  return fixed(v, 3);
}

ReportMeta meta_for(const Dataset& dataset) {
  return {dataset.size(), dataset.chains().size(), dataset.failures()};
}

std::string render(const ReportDocument& doc, ReportFormat format) {
  switch (format) {
    case ReportFormat::markdown: return render_markdown(doc);
    case ReportFormat::csv: return render_csv(doc);
    case ReportFormat::json: return render_json(doc);
  }
  return render_markdown(doc);
}

Section summary_section(const std::vector<ColumnSummary>& rows) {
  Section s;
  s.title = "Descriptive statistics";
  s.columns = {"Variable", "Mean", "Standard deviation", "Shapiro-Wilk W", "p-value"};
  for (const auto& r : rows) {
    s.rows.push_back({Cell::str(r.label), Cell::num(r.mean, NumberStyle::descriptive),
                      Cell::num(r.std, NumberStyle::descriptive),
                      Cell::num(r.sw_w, NumberStyle::statistic),
                      Cell::num(r.sw_p, NumberStyle::p_value)});
  }
  return s;
}

Section correlation_section(const CorrelationMatrix& cm) {
  Section s;
  s.title = "Correlation matrix";
  s.columns.push_back("");
  for (const auto& l : cm.labels) s.columns.push_back(column_label(l));
  for (std::size_t i = 0; i < cm.labels.size(); ++i) {
    std::vector<Cell> row = {Cell::str(column_label(cm.labels[i]))};
    for (std::size_t j = 0; j < cm.labels.size(); ++j)
      row.push_back(Cell::num(cm.r(i, j), NumberStyle::correlation));
    s.rows.push_back(std::move(row));
  }
  return s;
}

Section screen_section(const ScreenReport& report) {
  static const char* titles[] = {"Logistic regression results with external factors",
                                 "Logistic regression results with internal factors",
                                 "Logistic regression results with internal factors as ratios of revenue"};
  Section s;
  s.title = titles[static_cast<int>(report.group)];
  s.columns.push_back("Estimates");
  for (const auto& e : report.fits) s.columns.push_back(column_label(e.predictor));

  auto add_row = [&](std::string label, auto make) {
    std::vector<Cell> row = {Cell::str(std::move(label))};
    for (const auto& e : report.fits) row.push_back(make(e.fit));
    s.rows.push_back(std::move(row));
  };
  for (std::size_t j = 0; j < 2; ++j) {
    add_row(j == 0 ? "Intercept" : "Slope",
            [j](const MleFit& f) { return Cell::num(f.beta[j], NumberStyle::coefficient); });
    add_row("(p-value)",
            [j](const MleFit& f) { return Cell::num(f.p_values[j], NumberStyle::p_value); });
    add_row("[s.e.]", [j](const MleFit& f) { return Cell::num(f.se[j], NumberStyle::coefficient); });
    add_row("Signif.", [j](const MleFit& f) { return code_cell(f.p_values[j]); });
  }
  add_row("AIC", [](const MleFit& f) { return Cell::num(f.aic, NumberStyle::statistic); });
  add_row("Separation",
          [](const MleFit& f) { return Cell::str(std::string(to_string(f.separation))); });
  s.notes.push_back("Dependent variable: fail.");
  s.notes.push_back("Signif. codes: 0 '***' 0.001 '**' 0.01 '*' 0.05 '.' 0.1 ' ' 1");
  return s;
}

Section final_model_section(const FirthFit& fit, std::size_t n) {
  Section s;
  s.title = "Failure prediction model";
  s.columns = {"", "Estimate", "Std. Error", "Chi-sq.", "Pr(>Chisq)"};
  for (std::size_t j = 0; j < fit.beta.size(); ++j) {
    const std::string label = j == 0 ? std::string("Intercept") : column_label(fit.labels[j]);
    s.rows.push_back({Cell::str(label), Cell::num(fit.beta[j], NumberStyle::coefficient),
                      Cell::num(fit.se[j], NumberStyle::coefficient),
                      Cell::num(fit.chisq[j], NumberStyle::statistic),
                      Cell::num(fit.p_values[j], NumberStyle::p_value)});
  }
  s.notes.push_back("Likelihood ratio test=" + format_number(fit.lr_stat, NumberStyle::statistic) +
                    " on " + std::to_string(fit.lr_df) +
                    " df, p=" + format_number(fit.lr_p, NumberStyle::p_value) +
                    ", n=" + std::to_string(n));
  s.notes.push_back("Wald test = " + format_number(fit.wald_stat, NumberStyle::statistic) +
                    " on " + std::to_string(fit.wald_df) +
                    " df, p = " + format_number(fit.wald_p, NumberStyle::p_value));
  if (!fit.converged) s.notes.push_back("Warning: penalized fit did not converge.");
  return s;
}

namespace {

Cell prediction_cell(const PredictionCell& c) {
  switch (c.kind) {
    case PredictionCell::Kind::probability: return Cell::num(c.value, NumberStyle::probability);
    case PredictionCell::Kind::not_available: return Cell::str("-");
    case PredictionCell::Kind::ceased_operations: return Cell::str("*");
  }
  return Cell::str("-");
}

}  // namespace

Section probability_section(const PredictionTable& table, std::string_view coefficient_source) {
  Section s;
  s.title = "Estimates of probability of failure";
  s.columns.push_back("Year");
  for (const auto& c : table.chains) s.columns.push_back(c);
  for (std::size_t y = 0; y < table.years.size(); ++y) {
    std::vector<Cell> row = {Cell::num(table.years[y], NumberStyle::integer)};
    for (const auto& c : table.cells[y]) row.push_back(prediction_cell(c));
    s.rows.push_back(std::move(row));
  }
  s.notes.push_back("- : not available");
  s.notes.push_back("* : firm has ceased operations");
  s.notes.push_back("Coefficients: " + std::string(coefficient_source));
  return s;
}

Section prediction_cell_section(std::string_view chain, int year, const PredictionCell& cell,
                                std::string_view coefficient_source) {
  Section s;
  s.title = "Probability of failure";
  s.columns = {"Chain", "Year", "Probability"};
  s.rows.push_back({Cell::str(std::string(chain)), Cell::num(year, NumberStyle::integer),
                    prediction_cell(cell)});
  s.notes.push_back("Coefficients: " + std::string(coefficient_source));
  return s;
}

}  // namespace retailfail
