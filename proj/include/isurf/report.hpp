#pragma once

#include "isurf/divisor.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace isurf {

struct ReportEntry {
  std::string id;
  std::string citation;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Exact comparisons only; values are rendered after the comparison is made.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void expect(const std::string& id, const std::string& citation, Int expected, Int computed);
  void expect(const std::string& id, const std::string& citation, const Rational& expected,
              const Rational& computed);
  void expect(const std::string& id, const std::string& citation, bool expected, bool computed);
  void expect(const std::string& id, const std::string& citation, const std::string& expected,
              const std::string& computed);
  // Conditions with no natural expected value ("holds").
  void require(const std::string& id, const std::string& citation, bool holds, const std::string& detail = {});
  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  void append(const Report& other, const std::string& prefix = {});
  void note(std::string n) { notes_.push_back(std::move(n)); }

  const std::string& title() const { return title_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t passed() const;
  std::size_t failed() const { return entries_.size() - passed(); }
  bool ok() const { return failed() == 0; }
  const ReportEntry* find(const std::string& id) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<ReportEntry> entries_;
  std::vector<std::string> notes_;
};

}  // namespace isurf
