#include "traceclt/cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <unistd.h>

namespace traceclt::cli {

namespace {

constexpr const char* kReportBanner = "# traceclt sample report";
constexpr const char* kVerifyBanner = "# traceclt verify report";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <class T>
T parse_field(const std::string& column, const std::string& v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw SchemaError("bad value in column " + column + ": '" + v + "'");
  return out;
}

double parse_real(const std::string& column, const std::string& v) {
  if (v == "nan") return std::nan("");
  if (v == "inf") return INFINITY;
  if (v == "-inf") return -INFINITY;
  return parse_field<double>(column, v);
}

auto row_key(const ExperimentRow& r) { return std::tuple{static_cast<int>(r.group), r.n, r.j, r.seed}; }

void write_header_block(std::ostream& os, const char* banner,
                        const std::vector<std::pair<std::string, std::string>>& header) {
  os << banner << "\n";
  for (const auto& [k, v] : header) os << "# " << k << "=" << v << "\n";
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

bool row_passes(const ExperimentRow& r, const Tolerances& tol) {
  const double se = r.N > 0 ? std::sqrt(r.var_W / static_cast<double>(r.N)) : 0.0;
  return r.ks <= tol.ks && r.ks <= r.bound_total &&
         std::abs(r.mean_W - r.oracle_mean) <= tol.moment_se * se;
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols{
      "group",       "n",           "j",      "N",      "seed",        "ks",
      "bound_term1", "bound_term2", "bound_total", "mean_W", "var_W", "oracle_mean",
      "oracle_var",  "pass",        "reference_22j_n"};
  return cols;
}

std::optional<std::string> ExperimentReport::header_value(const std::string& key) const {
  for (const auto& [k, v] : header)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> run_header(const ExperimentConfig& c) {
  return {{"schema_version", std::to_string(kReportSchemaVersion)},
          {"tool_version", TRACECLT_VERSION},
          {"group", std::string(group_tag(c.group))},
          {"n", std::to_string(c.n)},
          {"j", join_ints(c.j)},
          {"samples", std::to_string(c.samples)},
          {"seed", std::to_string(c.seed)},
          {"ks_tolerance", format_double(c.tolerances.ks)},
          {"moment_se_tolerance", format_double(c.tolerances.moment_se)}};
}

std::string emit_report(const ExperimentReport& r) {
  std::ostringstream os;
  write_header_block(os, kReportBanner, r.header);
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& row : r.rows) {
    os << group_tag(row.group) << ',' << row.n << ',' << row.j << ',' << row.N << ',' << row.seed
       << ',' << format_double(row.ks) << ',' << format_double(row.bound_term1) << ','
       << format_double(row.bound_term2) << ',' << format_double(row.bound_total) << ','
       << format_double(row.mean_W) << ',' << format_double(row.var_W) << ','
       << format_double(row.oracle_mean) << ',' << format_double(row.oracle_var) << ','
       << (row.pass ? "true" : "false") << ','
       << (row.reference ? format_double(*row.reference) : std::string()) << "\n";
  }
  return os.str();
}

ExperimentReport parse_report(const std::string& text) {
  ExperimentReport r;
  std::istringstream in(text);
  std::string line;
  bool columns_seen = false;
  bool banner_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (columns_seen) throw SchemaError("header line after the column row");
      if (line == kReportBanner) {
        banner_seen = true;
        continue;
      }
      const auto eq = line.find('=');
      if (line.size() < 2 || line[1] != ' ' || eq == std::string::npos)
        throw SchemaError("malformed header line '" + line + "'");
      r.header.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    if (!columns_seen) {
      if (split(line, ',') != report_columns()) throw SchemaError("unexpected report columns");
      columns_seen = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != report_columns().size())
      throw SchemaError("row has " + std::to_string(cells.size()) + " fields");
    ExperimentRow row;
    try {
      row.group = parse_group(cells[0]);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
    const auto& cols = report_columns();
    row.n = parse_field<int>(cols[1], cells[1]);
    row.j = parse_field<int>(cols[2], cells[2]);
    row.N = parse_field<std::size_t>(cols[3], cells[3]);
    row.seed = parse_field<std::uint64_t>(cols[4], cells[4]);
    double* reals[] = {&row.ks,     &row.bound_term1, &row.bound_term2, &row.bound_total,
                       &row.mean_W, &row.var_W,       &row.oracle_mean, &row.oracle_var};
    for (std::size_t k = 0; k < std::size(reals); ++k) *reals[k] = parse_real(cols[5 + k], cells[5 + k]);
    if (cells[13] != "true" && cells[13] != "false") throw SchemaError("bad pass flag '" + cells[13] + "'");
    row.pass = cells[13] == "true";
    if (!cells[14].empty()) row.reference = parse_real(cols[14], cells[14]);
    r.rows.push_back(row);
  }
  if (!banner_seen || !columns_seen) throw SchemaError("not a sample report");
  const auto version = r.header_value("schema_version");
  if (!version || *version != std::to_string(kReportSchemaVersion))
    throw SchemaError("unsupported report schema_version");
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return text.str();
}

ExperimentReport read_report(const std::string& path) { return parse_report(read_file(path)); }

ExperimentReport merge_reports(const std::vector<ExperimentReport>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("report-merge needs at least one input");
  static const char* const kShared[] = {"schema_version", "ks_tolerance", "moment_se_tolerance"};
  ExperimentReport merged;
  for (const char* key : kShared) {
    const auto first = inputs.front().header_value(key);
    for (const auto& in : inputs)
      if (in.header_value(key) != first)
        throw SchemaError(std::string("reports disagree on ") + key);
    if (first) merged.header.emplace_back(key, *first);
  }
  std::set<std::string> versions;
  for (const auto& in : inputs)
    if (auto v = in.header_value("tool_version")) versions.insert(*v);
  std::string joined;
  for (const auto& v : versions) joined += (joined.empty() ? "" : ";") + v;
  merged.header.emplace_back("tool_version", joined);
  merged.header.emplace_back("merged_inputs", std::to_string(inputs.size()));

  std::set<decltype(row_key(ExperimentRow{}))> seen;
  for (const auto& in : inputs)
    for (const auto& row : in.rows)
      if (seen.insert(row_key(row)).second) merged.rows.push_back(row);
  std::stable_sort(merged.rows.begin(), merged.rows.end(),
                   [](const ExperimentRow& a, const ExperimentRow& b) { return row_key(a) < row_key(b); });
  return merged;
}

ExperimentConfig config_from_header(const ExperimentReport& r) {
  std::string text = "schema_version = " + std::to_string(kConfigSchemaVersion) + "\n";
  for (const char* key : {"group", "n", "j", "samples", "seed", "ks_tolerance", "moment_se_tolerance"}) {
    const auto v = r.header_value(key);
    if (!v) throw SchemaError(std::string("report header lacks ") + key);
    text += std::string(key) + " = " + *v + "\n";
  }
  try {
    return parse_config(text);
  } catch (const ConfigError& e) {
    throw SchemaError(e.what());
  }
}

std::string emit_verify_report(Group g, int j_max, const std::vector<stein::LemmaReport>& reports) {
  std::ostringstream os;
  write_header_block(os, kVerifyBanner,
                     {{"schema_version", std::to_string(kReportSchemaVersion)},
                      {"tool_version", TRACECLT_VERSION},
                      {"group", std::string(group_tag(g))},
                      {"jmax", std::to_string(j_max)},
                      {"all_exact", stein::all_exact(reports) ? "true" : "false"}});
  os << "lemma\tgroup\tj\tstatus\tmin_n\tresidual\tdetail\n";
  for (const auto& rep : reports) {
    os << rep.lemma << '\t' << group_tag(rep.group) << '\t' << rep.j << '\t'
       << (rep.status == stein::LemmaStatus::ExactMatch ? "exact" : "residual") << '\t' << rep.min_n
       << '\t' << rep.residual.to_string() << '\t' << rep.detail << "\n";
  }
  return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  static std::atomic<unsigned> counter{0};
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignore;
      fs::remove(tmp, ignore);
      throw IoError("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw IoError("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
  }
}

}  // namespace traceclt::cli
