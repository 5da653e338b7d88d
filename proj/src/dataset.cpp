#include "retailfail/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "retailfail/error.hpp"

namespace retailfail {

namespace {

constexpr std::size_t kFieldCount = 13;

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string record_tag(const FirmYearRecord& r) {
  return r.chain + " " + std::to_string(r.year);
}

void validate_record(const FirmYearRecord& r) {
  auto fail = [&](const std::string& what) {
    throw ValidationError(record_tag(r) + ": " + what);
  };
  if (r.chain.empty()) throw ValidationError("record with empty chain identifier");
  if (r.year < 1990 || r.year > 2100) fail("year outside [1990, 2100]");
  if (r.fail != 0 && r.fail != 1) fail("fail must be 0 or 1");
  if (r.pandemic != 0 && r.pandemic != 1) fail("pandemic must be 0 or 1");
  for (double v : {r.revenue, r.cost_of_revenue, r.sga, r.ebitda, r.us_interest_rate,
                   r.us_inflation_rate, r.long_term_debt, r.acsi})
    if (!std::isfinite(v)) fail("non-finite value");
  if (!(r.revenue > 0.0)) fail("revenue must be > 0");
  if (r.cost_of_revenue < 0.0) fail("cost_of_revenue must be >= 0");
  if (r.sga < 0.0) fail("sga must be >= 0");
  if (r.long_term_debt < 0.0) fail("long_term_debt must be >= 0");
  if (r.stores <= 0) fail("stores must be > 0");
  if (r.acsi < 0.0 || r.acsi > 100.0) fail("acsi outside [0, 100]");
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, std::size_t line, const char* column) {
  text = trim(text);
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw ParseError(line, std::string("column '") + column + "': not a number: '" +
                               std::string(text) + "'");
  return v;
}

int parse_int(std::string_view text, std::size_t line, const char* column) {
  text = trim(text);
  int v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw ParseError(line, std::string("column '") + column + "': not an integer: '" +
                               std::string(text) + "'");
  return v;
}

void append_number(std::string& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

void append_field(std::string& out, std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    out.append(s);
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

std::string_view to_string(RatioPolicy policy) {
  switch (policy) {
    case RatioPolicy::full: return "full";
    case RatioPolicy::printed: return "printed";
    case RatioPolicy::published: return "published";
  }
  return "full";
}

RatioPolicy ratio_policy_from_string(std::string_view name) {
  if (name == "full") return RatioPolicy::full;
  if (name == "printed") return RatioPolicy::printed;
  if (name == "published") return RatioPolicy::published;
  throw DomainError("unknown ratio policy '" + std::string(name) +
                    "' (expected full, printed or published)");
}

DerivedRatios derive_ratios(const FirmYearRecord& record) {
  if (!(record.revenue > 0.0))
    throw DomainError("derive_ratios: revenue must be > 0 (" + record_tag(record) + ")");
  return {record.sga / record.revenue, record.cost_of_revenue / record.revenue,
          record.ebitda / record.revenue, record.long_term_debt / record.revenue};
}

DerivedRatios apply_policy(const DerivedRatios& r, RatioPolicy policy) {
  switch (policy) {
    case RatioPolicy::full:
      return r;
    case RatioPolicy::printed:
      return {round2(r.sga_over_rev), round2(r.cor_over_rev), round2(r.ebitda_over_rev),
              round2(r.ltd_over_rev)};
    case RatioPolicy::published:
      return {round2(r.sga_over_rev), round2(r.cor_over_rev), r.ebitda_over_rev,
              r.ltd_over_rev};
  }
  return r;
}

const std::vector<std::string>& numeric_column_names() {
  static const std::vector<std::string> names = {
      "year",           "fail",           "revenue",           "cost_of_revenue",
      "sga",            "ebitda",         "stores",            "us_interest_rate",
      "us_inflation_rate", "long_term_debt", "pandemic",        "acsi",
      "sga_over_rev",   "cor_over_rev",   "ebitda_over_rev",   "ltd_over_rev"};
  return names;
}

bool is_ratio_column(std::string_view name) {
  return name == "sga_over_rev" || name == "cor_over_rev" || name == "ebitda_over_rev" ||
         name == "ltd_over_rev";
}

Dataset::Dataset(std::vector<FirmYearRecord> records) : records_(std::move(records)) {
  if (records_.empty()) throw ValidationError("empty dataset");

  std::map<std::string, std::size_t> last_index;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    validate_record(r);
    auto it = last_index.find(r.chain);
    if (it == last_index.end()) {
      chains_.push_back(r.chain);
    } else {
      const auto& prev = records_[it->second];
      if (prev.fail == 1)
        throw ValidationError(record_tag(r) + ": record follows the chain's failure year " +
                              std::to_string(prev.year));
      if (r.year != prev.year + 1)
        throw ValidationError(record_tag(r) + ": years must be ascending and contiguous (previous " +
                              std::to_string(prev.year) + ")");
    }
    last_index[r.chain] = i;
    ratios_.push_back(derive_ratios(r));
  }
}

std::size_t Dataset::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const auto& r) { return r.fail == 1; }));
}

Vector Dataset::column(std::string_view name, RatioPolicy policy) const {
  Vector out;
  out.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    const DerivedRatios q = apply_policy(ratios_[i], policy);
    double v;
    if (name == "year") v = r.year;
    else if (name == "fail") v = r.fail;
    else if (name == "revenue") v = r.revenue;
    else if (name == "cost_of_revenue") v = r.cost_of_revenue;
    else if (name == "sga") v = r.sga;
    else if (name == "ebitda") v = r.ebitda;
    else if (name == "stores") v = r.stores;
    else if (name == "us_interest_rate") v = r.us_interest_rate;
    else if (name == "us_inflation_rate") v = r.us_inflation_rate;
    else if (name == "long_term_debt") v = r.long_term_debt;
    else if (name == "pandemic") v = r.pandemic;
    else if (name == "acsi") v = r.acsi;
    else if (name == "sga_over_rev") v = q.sga_over_rev;
    else if (name == "cor_over_rev") v = q.cor_over_rev;
    else if (name == "ebitda_over_rev") v = q.ebitda_over_rev;
    else if (name == "ltd_over_rev") v = q.ltd_over_rev;
    else {
      std::string valid;
      for (const auto& n : numeric_column_names()) valid += (valid.empty() ? "" : ", ") + n;
      throw DomainError("unknown column '" + std::string(name) + "'; valid names: " + valid);
    }
    out.push_back(v);
  }
  return out;
}

Dataset Dataset::filter_chain(std::string_view chain) const {
  std::vector<FirmYearRecord> subset;
  for (const auto& r : records_)
    if (r.chain == chain) subset.push_back(r);
  if (subset.empty()) throw ValidationError("no records for chain '" + std::string(chain) + "'");
  return Dataset(std::move(subset));
}

std::string Dataset::to_csv() const {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records_) {
    append_field(out, r.chain);
    for (double v : {static_cast<double>(r.year), static_cast<double>(r.fail), r.revenue,
                     r.cost_of_revenue, r.sga, r.ebitda, static_cast<double>(r.stores),
                     r.us_interest_rate, r.us_inflation_rate, r.long_term_debt,
                     static_cast<double>(r.pandemic), r.acsi}) {
      out += ',';
      append_number(out, v);
    }
    out += '\n';
  }
  return out;
}

Dataset parse_dataset(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<FirmYearRecord> records;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!saw_header) {
      if (line != kCsvHeader)
        throw ParseError(line_no, "header must be exactly '" + std::string(kCsvHeader) + "'");
      saw_header = true;
      continue;
    }
    if (trim(line).empty()) continue;

    const auto f = split_csv_line(line);
    if (f.size() != kFieldCount)
      throw ParseError(line_no, "expected " + std::to_string(kFieldCount) + " fields, got " +
                                    std::to_string(f.size()));
    FirmYearRecord r;
    r.chain = std::string(trim(f[0]));
    r.year = parse_int(f[1], line_no, "year");
    r.fail = parse_int(f[2], line_no, "fail");
    r.revenue = parse_real(f[3], line_no, "revenue");
    r.cost_of_revenue = parse_real(f[4], line_no, "cost_of_revenue");
    r.sga = parse_real(f[5], line_no, "sga");
    r.ebitda = parse_real(f[6], line_no, "ebitda");
    r.stores = parse_int(f[7], line_no, "stores");
    r.us_interest_rate = parse_real(f[8], line_no, "us_interest_rate");
    r.us_inflation_rate = parse_real(f[9], line_no, "us_inflation_rate");
    r.long_term_debt = parse_real(f[10], line_no, "long_term_debt");
    r.pandemic = parse_int(f[11], line_no, "pandemic");
    r.acsi = parse_real(f[12], line_no, "acsi");
    try {
      validate_record(r);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    records.push_back(std::move(r));
  }
  if (!saw_header) throw ParseError(1, "missing header");
  return Dataset(std::move(records));
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open data file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_dataset(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

DesignMatrix make_design(Vector y, const std::vector<Vector>& columns,
                         std::vector<std::string> labels) {
  if (labels.size() != columns.size())
    throw DomainError("make_design: one label per predictor column required");
  const std::size_t n = y.size();
  if (n == 0) throw DomainError("make_design: empty response");
  for (double v : y)
    if (v != 0.0 && v != 1.0) throw DomainError("make_design: response must be 0/1");

  DesignMatrix dm;
  dm.x = Matrix(n, columns.size() + 1);
  dm.labels.reserve(columns.size() + 1);
  dm.labels.emplace_back("(Intercept)");
  for (std::size_t i = 0; i < n; ++i) dm.x(i, 0) = 1.0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw DomainError("make_design: column length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(columns[j][i]))
        throw DomainError("make_design: non-finite entry in column '" + labels[j] + "'");
      dm.x(i, j + 1) = columns[j][i];
    }
    dm.labels.push_back(std::move(labels[j]));
  }
  dm.y = std::move(y);
  return dm;
}

DesignMatrix design_matrix(const Dataset& dataset, std::span<const std::string> predictors,
                           RatioPolicy policy) {
  std::vector<Vector> cols;
  cols.reserve(predictors.size());
  for (const auto& name : predictors) cols.push_back(dataset.column(name, policy));
  return make_design(dataset.column("fail"), cols,
                     std::vector<std::string>(predictors.begin(), predictors.end()));
}

}  // namespace retailfail
