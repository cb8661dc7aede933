#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wavelab {

/// Tabular experiment record: named numeric columns, ordered summary scalars
/// and free-text notes. Flags are stored as 0/1 columns.
class ExperimentReport {
 public:
  ExperimentReport(std::string name, std::vector<std::string> columns);

  void add_row(std::vector<double> row);
  void set_summary(const std::string& key, double value);
  void add_note(std::string note);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, double>>& summary() const { return summary_; }
  const std::vector<std::string>& notes() const { return notes_; }

  std::vector<double> column(const std::string& name) const;
  double summary_value(const std::string& key) const;

  /// Round-trip exact (%.17g) so identical runs give identical bytes.
  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;

 private:
  std::size_t column_index(const std::string& name) const;

  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, double>> summary_;
  std::vector<std::string> notes_;
};

std::string format_number(double value);

}  // namespace wavelab
