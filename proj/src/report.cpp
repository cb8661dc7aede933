#include "wavelab/report.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wavelab {

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

ExperimentReport::ExperimentReport(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {}

void ExperimentReport::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("report " + name_ + ": row width does not match columns");
  }
  rows_.push_back(std::move(row));
}

void ExperimentReport::set_summary(const std::string& key, double value) {
  for (auto& entry : summary_) {
    if (entry.first == key) {
      entry.second = value;
      return;
    }
  }
  summary_.emplace_back(key, value);
}

void ExperimentReport::add_note(std::string note) { notes_.push_back(std::move(note)); }

std::size_t ExperimentReport::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw std::out_of_range("report " + name_ + ": no column " + name);
}

std::vector<double> ExperimentReport::column(const std::string& name) const {
  const auto index = column_index(name);
  std::vector<double> values;
  values.reserve(rows_.size());
  for (const auto& row : rows_) values.push_back(row[index]);
  return values;
}

double ExperimentReport::summary_value(const std::string& key) const {
  for (const auto& [k, v] : summary_) {
    if (k == key) return v;
  }
  throw std::out_of_range("report " + name_ + ": no summary value " + key);
}

void ExperimentReport::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [k, v] : summary_) summary[k] = v;
  return {{"name", name_},
          {"columns", columns_},
          {"rows", rows_},
          {"summary", summary},
          {"notes", notes_}};
}

}  // namespace wavelab
