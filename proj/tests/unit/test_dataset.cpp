#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "retailfail/dataset.hpp"
#include "retailfail/error.hpp"

using namespace retailfail;

namespace {

const std::string kHeader(kCsvHeader);

std::string two_rows() {
  return kHeader + "\n" +
         "Acme,2019,0,100,60,30,10,50,2.1,1.8,40,0,75\n"
         "Acme,2020,1,80,60,30,-10,45,0.5,1.2,48,1,74\n";
}

}  // namespace

TEST(Dataset, EmbeddedShape) {
  const Dataset& d = embedded_dataset();
  EXPECT_EQ(d.size(), 32u);
  EXPECT_EQ(d.failures(), 4u);
  ASSERT_EQ(d.chains().size(), 4u);
  EXPECT_EQ(d.chains()[0], "Bed Bath & Beyond");
  EXPECT_EQ(d.chains()[3], "JC Penney");
  EXPECT_EQ(d.filter_chain("Sears Holdings").size(), 6u);
  EXPECT_EQ(d.filter_chain("Rite Aid").size(), 10u);
}

TEST(Dataset, EmbeddedMatchesShippedCsv) {
  EXPECT_EQ(load_dataset(std::string(RETAILFAIL_DATA_DIR) + "/retail_chains.csv"), embedded_dataset());
}

TEST(Dataset, RevenueSumAndRatios) {
  const Dataset& d = embedded_dataset();
  double sum = 0;
  for (double v : d.column("revenue")) sum += v;
  EXPECT_EQ(sum, 539354.0);

  // Bed Bath & Beyond 2022.
  const auto& r = d.record(7);
  ASSERT_EQ(r.year, 2022);
  EXPECT_DOUBLE_EQ(d.ratios(7).ebitda_over_rev, -2992.29 / 5345.0);
  EXPECT_DOUBLE_EQ(d.ratios(7).ltd_over_rev, 1180.0 / 5345.0);
  const DerivedRatios printed = apply_policy(d.ratios(7), RatioPolicy::printed);
  EXPECT_DOUBLE_EQ(printed.ebitda_over_rev, -0.56);
  EXPECT_DOUBLE_EQ(printed.ltd_over_rev, 0.22);
  const DerivedRatios published = apply_policy(d.ratios(7), RatioPolicy::published);
  EXPECT_DOUBLE_EQ(published.sga_over_rev, 0.44);
  EXPECT_DOUBLE_EQ(published.cor_over_rev, 0.77);
  EXPECT_DOUBLE_EQ(published.ebitda_over_rev, d.ratios(7).ebitda_over_rev);
}

TEST(Dataset, PolicyNames) {
  for (auto p : {RatioPolicy::full, RatioPolicy::printed, RatioPolicy::published})
    EXPECT_EQ(ratio_policy_from_string(to_string(p)), p);
  EXPECT_THROW(ratio_policy_from_string("rounded"), DomainError);
}

TEST(Dataset, UnknownColumnListsValidNames) {
  try {
    embedded_dataset().column("revnue");
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("revenue"), std::string::npos);
  }
  EXPECT_EQ(numeric_column_names().size(), 16u);
  EXPECT_TRUE(is_ratio_column("ltd_over_rev"));
  EXPECT_FALSE(is_ratio_column("long_term_debt"));
}

TEST(Dataset, CsvRoundTripIsExact) {
  const Dataset& d = embedded_dataset();
  const std::string csv = d.to_csv();
  EXPECT_EQ(csv.substr(0, kHeader.size()), kHeader);
  const Dataset back = parse_dataset(csv);
  EXPECT_EQ(back, d);
  EXPECT_EQ(back.to_csv(), csv);
}

TEST(Dataset, QuotedChainNamesRoundTrip) {
  const std::string csv = kHeader + "\n\"Smith, Jones \"\"& Co\"\"\",2020,1,10,5,2,1,3,1,1,2,0,70\n";
  const Dataset d = parse_dataset(csv);
  EXPECT_EQ(d.record(0).chain, "Smith, Jones \"& Co\"");
  EXPECT_EQ(parse_dataset(d.to_csv()), d);
}

TEST(Dataset, ParsesBomCrlfAndBlankLines) {
  std::string text = "\xEF\xBB\xBF" + two_rows();
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += "\r\n";
    else crlf += c;
  }
  crlf += "\r\n";
  const Dataset d = parse_dataset(crlf);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.record(1).fail, 1);
  EXPECT_DOUBLE_EQ(d.record(1).ebitda, -10.0);
}

TEST(Dataset, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_dataset(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("chain,year\n"), 1u);
  EXPECT_EQ(line_of(kHeader + "\nAcme,2019,0,100\n"), 2u);
  EXPECT_EQ(line_of(kHeader + "\nAcme,2019,0,100,60,30,10,50,2.1,1.8,40,0,75\nAcme,2020,1,abc,60,30,10,50,2.1,1.8,40,0,75\n"), 3u);
  EXPECT_EQ(line_of(kHeader + "\nAcme,2019.5,0,100,60,30,10,50,2.1,1.8,40,0,75\n"), 2u);
  EXPECT_EQ(line_of(""), 1u);
}

TEST(Dataset, ValidationRules) {
  EXPECT_THROW(parse_dataset(kHeader + "\n"), ValidationError);
  // Gap in years.
  EXPECT_THROW(parse_dataset(kHeader + "\nAcme,2018,0,100,60,30,10,50,2.1,1.8,40,0,75\n"
                                       "Acme,2020,1,80,60,30,-10,45,0.5,1.2,48,1,74\n"),
               ValidationError);
  // Record after the failure year.
  EXPECT_THROW(parse_dataset(kHeader + "\nAcme,2019,1,100,60,30,10,50,2.1,1.8,40,0,75\n"
                                       "Acme,2020,0,80,60,30,-10,45,0.5,1.2,48,1,74\n"),
               ValidationError);
  // Non-positive revenue, flag outside {0,1}, negative stores.
  EXPECT_THROW(parse_dataset(kHeader + "\nAcme,2019,0,0,60,30,10,50,2.1,1.8,40,0,75\n"), ValidationError);
  EXPECT_THROW(parse_dataset(kHeader + "\nAcme,2019,2,100,60,30,10,50,2.1,1.8,40,0,75\n"), ValidationError);
  EXPECT_THROW(parse_dataset(kHeader + "\nAcme,2019,0,100,60,30,10,-5,2.1,1.8,40,0,75\n"), ValidationError);
  EXPECT_THROW(parse_dataset(kHeader + "\n,2019,0,100,60,30,10,5,2.1,1.8,40,0,75\n"), ValidationError);
}

TEST(Dataset, LoadReportsPathAndMissingFile) {
  EXPECT_THROW(load_dataset("/nonexistent/retail.csv"), ValidationError);
  const auto path = std::filesystem::temp_directory_path() / "retailfail_bad.csv";
  std::ofstream(path) << kHeader << "\nAcme,2019,0,x,60,30,10,50,2.1,1.8,40,0,75\n";
  try {
    load_dataset(path.string());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find(path.string()), std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST(Dataset, DesignMatrixLayout) {
  const std::vector<std::string> pred = {"us_inflation_rate", "ltd_over_rev"};
  const DesignMatrix dm = design_matrix(embedded_dataset(), pred);
  EXPECT_EQ(dm.n(), 32u);
  EXPECT_EQ(dm.p(), 3u);
  EXPECT_EQ(dm.labels, (std::vector<std::string>{"(Intercept)", "us_inflation_rate", "ltd_over_rev"}));
  EXPECT_EQ(dm.x(5, 0), 1.0);
  EXPECT_EQ(dm.x(5, 1), embedded_dataset().record(5).us_inflation_rate);
  EXPECT_THROW(make_design({0, 2}, {{1, 2}}, {"x"}), DomainError);
  EXPECT_THROW(make_design({0, 1}, {{1}}, {"x"}), DomainError);
}
