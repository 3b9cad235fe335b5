#include "lienard/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace lienard::report {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown output format '" + name + "' (expected csv or json)");
}

std::string extension(Format f) { return f == Format::csv ? "csv" : "json"; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (const char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(double v) const {
      if (std::isfinite(v)) return v;
      return format_double(v);
    }
    nlohmann::json operator()(long long v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
    nlohmann::json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table, const Meta& meta) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
  out << "# command=" << meta.command << '\n';
  out << "# version=" << meta.version << '\n';
  for (const auto& [k, v] : meta.params) out << "# " << k << '=' << v << '\n';
}

void write_json(std::ostream& out, const Table& table, const Meta& meta) {
  nlohmann::json doc;
  doc["meta"]["command"] = meta.command;
  doc["meta"]["version"] = meta.version;
  doc["meta"]["params"] = nlohmann::json::object();
  for (const auto& [k, v] : meta.params) doc["meta"]["params"][k] = v;
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write(std::ostream& out, const Table& table, const Meta& meta, Format f) {
  if (f == Format::csv) {
    write_csv(out, table, meta);
  } else {
    write_json(out, table, meta);
  }
}

void write_file(const std::filesystem::path& path, const Table& table, const Meta& meta, Format f) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) {
    throw std::runtime_error("cannot write " + path.string() + ": cannot create directory " +
                             path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write(out, table, meta, f);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ReportRecord within(std::string check, std::string params, double measured, double expected, double tolerance) {
  const bool pass = std::abs(measured - expected) <= tolerance;
  return {std::move(check), std::move(params), measured, expected, tolerance, "abs_diff", pass};
}

ReportRecord at_most(std::string check, std::string params, double measured, double bound) {
  return {std::move(check), std::move(params), measured, bound, 0.0, "at_most", measured <= bound};
}

ReportRecord at_least(std::string check, std::string params, double measured, double bound) {
  return {std::move(check), std::move(params), measured, bound, 0.0, "at_least", measured >= bound};
}

ReportRecord equal(std::string check, std::string params, double measured, double expected) {
  return {std::move(check), std::move(params), measured, expected, 0.0, "equal", measured == expected};
}

Table records_table(const std::vector<ReportRecord>& records) {
  Table t{{"check", "params", "measured", "expected", "tolerance", "rule", "pass"}, {}};
  for (const auto& r : records) {
    t.add_row({r.check, r.params, r.measured, r.expected, r.tolerance, r.rule, r.pass});
  }
  return t;
}

}  // namespace lienard::report
