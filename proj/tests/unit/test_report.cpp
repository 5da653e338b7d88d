#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "retailfail/error.hpp"
#include "retailfail/report.hpp"

using namespace retailfail;

TEST(Report, NumberStyles) {
  EXPECT_EQ(format_number(-4.34981, NumberStyle::coefficient), "-4.350");
  EXPECT_EQ(format_number(-0.000207, NumberStyle::coefficient), "-0.000207");
  EXPECT_EQ(format_number(0.0015253, NumberStyle::coefficient), "0.00153");
  EXPECT_EQ(format_number(0.0, NumberStyle::coefficient), "0.000");
  EXPECT_EQ(format_number(0.00067, NumberStyle::p_value), "<0.001");
  EXPECT_EQ(format_number(0.0212, NumberStyle::p_value), "0.021");
  EXPECT_EQ(format_number(-0.0004, NumberStyle::correlation), "0.00");
  EXPECT_EQ(format_number(16854.8125, NumberStyle::descriptive), "16854.81");
  EXPECT_EQ(format_number(-0.0121, NumberStyle::descriptive), "-0.012");
  EXPECT_EQ(format_number(2015, NumberStyle::integer), "2015");
  EXPECT_EQ(format_number(NAN, NumberStyle::statistic), "NA");
}

TEST(Report, FormatNames) {
  for (auto f : {ReportFormat::markdown, ReportFormat::csv, ReportFormat::json})
    EXPECT_EQ(report_format_from_string(to_string(f)), f);
  EXPECT_THROW(report_format_from_string("xml"), DomainError);
}

namespace {

ReportDocument sample() {
  ReportDocument doc;
  Section s;
  s.title = "Sample";
  s.columns = {"Name", "Value", "p"};
  s.rows.push_back({Cell::str("a, b"), Cell::num(1.23456, NumberStyle::statistic),
                    Cell::num(0.0001, NumberStyle::p_value)});
  s.rows.push_back({Cell::str("x|y"), Cell::num(NAN, NumberStyle::statistic),
                    Cell::num(0.5, NumberStyle::p_value)});
  s.notes.push_back("note");
  doc.sections.push_back(s);
  doc.meta = meta_for(embedded_dataset());
  return doc;
}

}  // namespace

TEST(Report, MarkdownLayout) {
  const std::string md = render(sample(), ReportFormat::markdown);
  EXPECT_NE(md.find("## Sample"), std::string::npos);
  EXPECT_NE(md.find("| a, b | 1.235 | <0.001 |"), std::string::npos);
  EXPECT_NE(md.find("x\\|y"), std::string::npos);
  EXPECT_NE(md.find("\nnote\n"), std::string::npos);
}

TEST(Report, CsvQuotesFields) {
  const std::string csv = render(sample(), ReportFormat::csv);
  EXPECT_NE(csv.find("Name,Value,p\n"), std::string::npos);
  EXPECT_NE(csv.find("\"a, b\",1.235,<0.001\n"), std::string::npos);
  EXPECT_NE(csv.find("# note"), std::string::npos);
}

TEST(Report, JsonSchema) {
  const auto j = nlohmann::json::parse(render(sample(), ReportFormat::json));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["meta"]["n"], 32);
  EXPECT_EQ(j["meta"]["chains"], 4);
  EXPECT_EQ(j["meta"]["failures"], 4);
  const auto& s = j["sections"][0];
  EXPECT_EQ(s["title"], "Sample");
  EXPECT_EQ(s["columns"].size(), 3u);
  EXPECT_EQ(s["rows"][0][1], 1.235);
  EXPECT_EQ(s["rows"][0][2], "<0.001");
  EXPECT_EQ(s["rows"][1][1], "NA");
  EXPECT_EQ(s["rows"][1][2], 0.5);
}

TEST(Report, JsonNumbersEqualRoundedPipelineValues) {
  const FirthFit fit = fit_final_model(embedded_dataset());
  ReportDocument doc;
  doc.sections.push_back(final_model_section(fit, 32));
  const auto j = nlohmann::json::parse(render(doc, ReportFormat::json));
  const auto& rows = j["sections"][0]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(rows[k][1].get<double>(), fit.beta[k], 0.0005 + 1e-12);
    EXPECT_NEAR(rows[k][2].get<double>(), fit.se[k], 0.0005 + 1e-12);
    EXPECT_NEAR(rows[k][3].get<double>(), fit.chisq[k], 0.0005 + 1e-12);
  }
}

TEST(Report, RenderingIsDeterministic) {
  ReportDocument doc;
  doc.sections.push_back(summary_section(describe(embedded_dataset())));
  doc.sections.push_back(correlation_section(correlation_matrix(embedded_dataset())));
  for (auto f : {ReportFormat::markdown, ReportFormat::csv, ReportFormat::json})
    EXPECT_EQ(render(doc, f), render(doc, f));
}

TEST(Report, ProbabilitySectionMarkers) {
  const PredictionTable t = probability_table(kPublishedFinalCoefficients, embedded_dataset());
  const Section s = probability_section(t, "rounded");
  ASSERT_EQ(s.rows.size(), 10u);
  EXPECT_EQ(s.rows[0][1].text, "-");
  EXPECT_EQ(s.rows[9][3].text, "*");
  EXPECT_EQ(s.notes.back(), "Coefficients: rounded");
}
