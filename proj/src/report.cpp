#include "isurf/report.hpp"

#include <algorithm>
#include <sstream>

namespace isurf {

void Report::expect(const std::string& id, const std::string& citation, Int expected, Int computed) {
  entries_.push_back({id, citation, std::to_string(expected), std::to_string(computed), expected == computed});
}

void Report::expect(const std::string& id, const std::string& citation, const Rational& expected,
                    const Rational& computed) {
  entries_.push_back({id, citation, format_rational(expected), format_rational(computed), expected == computed});
}

void Report::expect(const std::string& id, const std::string& citation, bool expected, bool computed) {
  entries_.push_back({id, citation, expected ? "true" : "false", computed ? "true" : "false", expected == computed});
}

void Report::expect(const std::string& id, const std::string& citation, const std::string& expected,
                    const std::string& computed) {
  entries_.push_back({id, citation, expected, computed, expected == computed});
}

void Report::require(const std::string& id, const std::string& citation, bool holds, const std::string& detail) {
  entries_.push_back({id, citation, "holds", holds ? "holds" : (detail.empty() ? "violated" : detail), holds});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    e.id = prefix + e.id;
    entries_.push_back(std::move(e));
  }
  for (const auto& n : other.notes_)
    if (std::find(notes_.begin(), notes_.end(), n) == notes_.end()) notes_.push_back(n);
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.pass; }));
}

const ReportEntry* Report::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : entries_)
    entries.push_back({{"id", e.id},
                       {"citation", e.citation},
                       {"expected", e.expected},
                       {"computed", e.computed},
                       {"pass", e.pass}});
  nlohmann::json out = {{"title", title_},
                        {"entries", entries},
                        {"summary", {{"total", entries_.size()}, {"passed", passed()}, {"failed", failed()}}}};
  if (!notes_.empty()) out["notes"] = notes_;
  return out;
}

std::string Report::to_text() const {
  std::size_t w_id = 2, w_cite = 8, w_exp = 8;
  for (const auto& e : entries_) {
    w_id = std::max(w_id, e.id.size());
    w_cite = std::max(w_cite, e.citation.size());
    w_exp = std::max(w_exp, e.expected.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  std::ostringstream os;
  if (!title_.empty()) os << "== " << title_ << "\n";
  for (const auto& e : entries_)
    os << (e.pass ? "PASS " : "FAIL ") << pad(e.id, w_id) << "  " << pad(e.citation, w_cite) << "  expected "
       << pad(e.expected, w_exp) << "  computed " << e.computed << "\n";
  for (const auto& n : notes_) os << "note: " << n << "\n";
  os << passed() << "/" << entries_.size() << " passed\n";
  return os.str();
}

}  // namespace isurf
