#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace lienard::report {

using Cell = std::variant<double, long long, std::string, bool>;

/// Column-ordered table with a fixed header.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Parameter echo and version carried by every output file.
struct Meta {
  std::string command;
  std::map<std::string, std::string> params;
  std::string version = LIENARD_VERSION;
};

enum class Format { csv, json };

Format parse_format(const std::string& name);
std::string extension(Format f);

/// Shortest-round-trip-safe 17 significant digit rendering; "nan", "inf",
/// "-inf" for non-finite values.
std::string format_double(double v);

/// Header line, one line per row, then "# key=value" metadata lines. `\n`
/// line endings throughout.
void write_csv(std::ostream& out, const Table& table, const Meta& meta);

/// {"meta": {"command", "params", "version"}, "rows": [{column: value}, …]}.
void write_json(std::ostream& out, const Table& table, const Meta& meta);

void write(std::ostream& out, const Table& table, const Meta& meta, Format f);

/// Writes to `path`, creating parent directories. Throws std::runtime_error
/// naming the path on I/O failure.
void write_file(const std::filesystem::path& path, const Table& table, const Meta& meta, Format f);

/// Outcome of one verification check.
struct ReportRecord {
  std::string check;
  std::string params;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string rule;  // "abs_diff", "at_most", "at_least", "equal"
  bool pass = false;
};

ReportRecord within(std::string check, std::string params, double measured, double expected, double tolerance);
ReportRecord at_most(std::string check, std::string params, double measured, double bound);
ReportRecord at_least(std::string check, std::string params, double measured, double bound);
ReportRecord equal(std::string check, std::string params, double measured, double expected);

Table records_table(const std::vector<ReportRecord>& records);

}  // namespace lienard::report
