#include "retailfail/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "retailfail/dataset.hpp"
#include "retailfail/descriptive.hpp"
#include "retailfail/error.hpp"
#include "retailfail/failure_model.hpp"
#include "retailfail/report.hpp"

namespace retailfail {

namespace {

struct Options {
  std::string data_path;
  std::string format = "markdown";
  std::string out_path;
  std::string coef = "fitted";
  std::string ratios = "full";
  std::string group;
  std::optional<std::string> chain;
  std::optional<int> year;
};

void add_globals(CLI::App& app, Options& o) {
  app.add_option("--data", o.data_path, "CSV dataset (default: embedded data)");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  app.add_option("--out", o.out_path, "Write output to this file instead of stdout");
  app.add_option("--ratios", o.ratios,
                 "Revenue-ratio precision: full, printed (2 dp) or published (SGA and "
                 "cost-of-revenue ratios at 2 dp)")
      ->check(CLI::IsMember({"full", "printed", "published"}));
}

void add_coef(CLI::App* sub, Options& o) {
  sub->add_option("--coef", o.coef, "Coefficients for probabilities: fitted or rounded")
      ->check(CLI::IsMember({"fitted", "rounded"}));
}

Dataset load(const Options& o) {
  return o.data_path.empty() ? embedded_dataset() : load_dataset(o.data_path);
}

std::vector<double> coefficients_for(const Options& o, const Dataset& data, RatioPolicy policy) {
  if (o.coef == "rounded")
    return {kPublishedFinalCoefficients.begin(), kPublishedFinalCoefficients.end()};
  return fit_final_model(data, policy).beta;
}

std::string coefficient_source(const Options& o) {
  return o.coef == "rounded" ? "published three-decimal values" : "fitted (full precision)";
}

std::string execute(const std::string& command, const Options& o) {
  const Dataset data = load(o);
  if (command == "export-data") return data.to_csv();

  const RatioPolicy policy = ratio_policy_from_string(o.ratios);
  ReportDocument doc;
  doc.meta = meta_for(data);

  if (command == "describe") {
    doc.sections.push_back(summary_section(describe(data, policy)));
  } else if (command == "correlate") {
    doc.sections.push_back(correlation_section(correlation_matrix(data, policy)));
  } else if (command == "fit") {
    doc.sections.push_back(screen_section(run_screen(data, screen_group_from_string(o.group), policy)));
  } else if (command == "fit-final") {
    doc.sections.push_back(final_model_section(fit_final_model(data, policy), data.size()));
  } else if (command == "predict") {
    const auto beta = coefficients_for(o, data, policy);
    const PredictionTable table = probability_table(beta, data, policy);
    if (o.chain && o.year)
      doc.sections.push_back(
          prediction_cell_section(*o.chain, *o.year, table.at(*o.year, *o.chain), coefficient_source(o)));
    else
      doc.sections.push_back(probability_section(table, coefficient_source(o)));
  } else if (command == "report") {
    doc.sections.push_back(summary_section(describe(data, policy)));
    doc.sections.push_back(correlation_section(correlation_matrix(data, policy)));
    for (auto g : {ScreenGroup::external, ScreenGroup::internal, ScreenGroup::ratios})
      doc.sections.push_back(screen_section(run_screen(data, g, policy)));
    const FirthFit fit = fit_final_model(data, policy);
    doc.sections.push_back(final_model_section(fit, data.size()));
    const auto beta = o.coef == "rounded" ? coefficients_for(o, data, policy) : fit.beta;
    doc.sections.push_back(probability_section(probability_table(beta, data, policy),
                                               coefficient_source(o)));
  }
  return render(doc, report_format_from_string(o.format));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Retail chain failure statistics: descriptive tables, logistic screens, "
               "Firth failure model and failure-probability tables"};
  app.name(args.empty() ? "retailfail" : args.front());
  app.require_subcommand(1, 1);

  Options o;
  add_globals(app, o);
  // Global options may also follow the subcommand.
  app.fallthrough();
  app.add_subcommand("export-data", "Write the dataset as canonical CSV");
  app.add_subcommand("describe", "Means, standard deviations and Shapiro-Wilk tests");
  app.add_subcommand("correlate", "Pearson correlation matrix");
  auto* fit = app.add_subcommand("fit", "Univariate logistic screens for one factor group");
  fit->add_option("--group", o.group, "external, internal or ratios")
      ->required()
      ->check(CLI::IsMember({"external", "internal", "ratios"}));
  app.add_subcommand("fit-final", "Firth penalized failure model");
  auto* predict = app.add_subcommand("predict", "Failure probabilities by chain and year");
  add_coef(predict, o);
  predict->add_option("--chain", o.chain, "Chain name");
  predict->add_option("--year", o.year, "Calendar year");
  add_coef(app.add_subcommand("report", "Every table in one document"), o);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("retailfail");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "predict" && (o.chain.has_value() != o.year.has_value())) {
    err << "error: --chain and --year must be given together\n" << predict->help();
    return kExitUsage;
  }

  std::string text;
  try {
    text = execute(command, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitDataError;
    }
  }
  return kExitOk;
}

}  // namespace retailfail
