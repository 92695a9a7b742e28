#include "blockcenter/report.hpp"

#include <sstream>

#include "blockcenter/matrix_io.hpp"

namespace blockcenter::report {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

Section& Report::add(std::string title, std::optional<bool> verdict) {
  sections.push_back(Section{std::move(title), verdict, {}, Json::object()});
  return sections.back();
}

void Report::finalize() {
  if (status == Status::Error) return;
  status = first_failure() ? Status::Fail : Status::Pass;
}

std::optional<std::string> Report::first_failure() const {
  for (const auto& s : sections) {
    if (s.verdict && !*s.verdict) return s.title + (s.lines.empty() ? "" : ": " + s.lines.front());
  }
  return std::nullopt;
}

Report error_report(const std::string& command, const std::string& message) {
  Report r;
  r.command = command;
  r.status = Status::Error;
  r.error = message;
  return r;
}

std::string emit_text(const Report& r) {
  std::ostringstream out;
  for (const auto& s : r.sections) {
    const char* mark = !s.verdict ? "-" : (*s.verdict ? "✓" : "✗");
    out << mark << " " << s.title << "\n";
    for (const auto& line : s.lines) {
      std::istringstream split(line);
      std::string piece;
      while (std::getline(split, piece)) out << "    " << piece << "\n";
    }
  }
  if (!r.error.empty()) out << "error: " << r.error << "\n";
  if (r.status == Status::Fail)
    if (auto f = r.first_failure()) out << "first failure: " << *f << "\n";
  out << r.command << ": " << status_name(r.status) << "\n";
  return out.str();
}

std::string emit_json(const Report& r) {
  Json j;
  j["schema"] = 1;
  j["command"] = r.command;
  j["status"] = status_name(r.status);
  if (!r.error.empty()) j["error"] = r.error;
  if (auto f = r.first_failure()) j["first_failure"] = *f;
  Json sections = Json::array();
  for (const auto& s : r.sections) {
    Json js;
    js["title"] = s.title;
    js["verdict"] = !s.verdict ? "INFO" : (*s.verdict ? "PASS" : "FAIL");
    js["lines"] = s.lines;
    js["data"] = s.data;
    sections.push_back(std::move(js));
  }
  j["sections"] = std::move(sections);
  return j.dump(2) + "\n";
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(io::to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(std::to_string(x));
  return a;
}

}  // namespace blockcenter::report
