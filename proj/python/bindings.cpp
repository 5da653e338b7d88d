#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "retailfail/cli.hpp"
#include "retailfail/dataset.hpp"
#include "retailfail/descriptive.hpp"
#include "retailfail/error.hpp"
#include "retailfail/failure_model.hpp"
#include "retailfail/firth.hpp"
#include "retailfail/logistic.hpp"

namespace py = pybind11;
using namespace retailfail;

namespace {

RatioPolicy policy(const std::string& name) { return ratio_policy_from_string(name); }

py::dict mle_dict(const MleFit& f) {
  py::dict d;
  d["labels"] = f.labels;
  d["beta"] = f.beta;
  d["se"] = f.se;
  d["p_values"] = f.p_values;
  d["log_lik"] = f.log_lik;
  d["aic"] = f.aic;
  d["converged"] = f.converged;
  d["separation"] = std::string(to_string(f.separation));
  return d;
}

py::dict firth_dict(const FirthFit& f) {
  py::dict d;
  d["labels"] = f.labels;
  d["beta"] = f.beta;
  d["se"] = f.se;
  d["chisq"] = f.chisq;
  d["p_values"] = f.p_values;
  d["pen_log_lik"] = f.pen_log_lik;
  d["lr_stat"] = f.lr_stat;
  d["lr_df"] = f.lr_df;
  d["lr_p"] = f.lr_p;
  d["wald_stat"] = f.wald_stat;
  d["wald_df"] = f.wald_df;
  d["wald_p"] = f.wald_p;
  d["converged"] = f.converged;
  return d;
}

// None for "-" cells, the string "*" for ceased operations.
py::object cell_object(const PredictionCell& c) {
  switch (c.kind) {
    case PredictionCell::Kind::probability: return py::float_(c.value);
    case PredictionCell::Kind::ceased_operations: return py::str("*");
    case PredictionCell::Kind::not_available: break;
  }
  return py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Retail chain failure statistics";

  py::register_exception<Error>(m, "RetailfailError", PyExc_ValueError);

  py::class_<Dataset>(m, "Dataset")
      .def("__len__", &Dataset::size)
      .def_property_readonly("chains", &Dataset::chains)
      .def_property_readonly("failures", &Dataset::failures)
      .def("column", [](const Dataset& d, const std::string& name, const std::string& ratios) {
             return d.column(name, policy(ratios));
           }, py::arg("name"), py::arg("ratios") = "full")
      .def("filter_chain", &Dataset::filter_chain)
      .def("to_csv", &Dataset::to_csv)
      .def("__eq__", [](const Dataset& a, const Dataset& b) { return a == b; });

  m.def("embedded_dataset", [] { return embedded_dataset(); });
  m.def("load_dataset", &load_dataset, py::arg("path"));
  m.def("parse_dataset", [](const std::string& text) { return parse_dataset(text); });
  m.def("column_names", &numeric_column_names);

  m.def("shapiro_wilk", [](const std::vector<double>& x) {
    const ShapiroWilk sw = shapiro_wilk(x);
    return py::make_tuple(sw.w, sw.p);
  });

  m.def("describe", [](const Dataset& d, const std::string& ratios) {
    py::list out;
    for (const auto& r : describe(d, policy(ratios))) {
      py::dict row;
      row["name"] = r.name;
      row["mean"] = r.mean;
      row["std"] = r.std;
      row["w"] = r.sw_w;
      row["p"] = r.sw_p;
      out.append(row);
    }
    return out;
  }, py::arg("dataset"), py::arg("ratios") = "full");

  m.def("correlation_matrix", [](const Dataset& d, const std::string& ratios) {
    const CorrelationMatrix cm = correlation_matrix(d, policy(ratios));
    std::vector<std::vector<double>> r(cm.labels.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) r[i].push_back(cm.r(i, j));
    return py::make_tuple(cm.labels, r);
  }, py::arg("dataset"), py::arg("ratios") = "full");

  m.def("fit_logistic", [](const Dataset& d, const std::vector<std::string>& predictors,
                           const std::string& ratios) {
    return mle_dict(fit_logistic(design_matrix(d, predictors, policy(ratios))));
  }, py::arg("dataset"), py::arg("predictors"), py::arg("ratios") = "full");

  m.def("run_screen", [](const Dataset& d, const std::string& group, const std::string& ratios) {
    py::dict out;
    for (const auto& e : run_screen(d, screen_group_from_string(group), policy(ratios)).fits)
      out[py::str(e.predictor)] = mle_dict(e.fit);
    return out;
  }, py::arg("dataset"), py::arg("group"), py::arg("ratios") = "full");

  m.def("fit_firth", [](const Dataset& d, const std::vector<std::string>& predictors,
                        const std::string& ratios) {
    return firth_dict(fit_firth(design_matrix(d, predictors, policy(ratios))));
  }, py::arg("dataset"), py::arg("predictors"), py::arg("ratios") = "full");

  m.def("fit_final_model", [](const Dataset& d, const std::string& ratios) {
    return firth_dict(fit_final_model(d, policy(ratios)));
  }, py::arg("dataset"), py::arg("ratios") = "full");

  m.def("probability_table", [](const Dataset& d, const std::vector<double>& beta,
                                const std::string& ratios) {
    const PredictionTable t = probability_table(beta, d, policy(ratios));
    py::dict out;
    for (std::size_t y = 0; y < t.years.size(); ++y) {
      py::dict row;
      for (std::size_t c = 0; c < t.chains.size(); ++c) row[py::str(t.chains[c])] = cell_object(t.cells[y][c]);
      out[py::int_(t.years[y])] = row;
    }
    return out;
  }, py::arg("dataset"), py::arg("beta"), py::arg("ratios") = "full");

  m.attr("PUBLISHED_FINAL_COEFFICIENTS") =
      std::vector<double>(kPublishedFinalCoefficients.begin(), kPublishedFinalCoefficients.end());

  // Runs the command-line front end in-process; returns (exit code, stdout, stderr).
  m.def("run_command", [](std::vector<std::string> args) {
    args.insert(args.begin(), "retailfail");
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
