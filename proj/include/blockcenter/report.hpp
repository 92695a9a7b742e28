#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockcenter/matrix.hpp"

namespace blockcenter::report {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Error };

std::string status_name(Status s);
int exit_code(Status s);

struct Section {
  std::string title;
  std::optional<bool> verdict;  // nullopt: informational
  std::vector<std::string> lines;
  Json data = Json::object();
};

struct Report {
  std::string command;
  Status status = Status::Pass;
  std::vector<Section> sections;
  std::string error;

  Section& add(std::string title, std::optional<bool> verdict = std::nullopt);
  /// Sets status from the section verdicts unless the report is an error.
  void finalize();
  /// "title: first line" of the first failing section.
  std::optional<std::string> first_failure() const;
};

Report error_report(const std::string& command, const std::string& message);

std::string emit_text(const Report& r);
/// Deterministic: ordered keys, integers as decimal strings.
std::string emit_json(const Report& r);

Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const std::vector<Int>& v);
Json to_json(const std::vector<std::size_t>& v);

}  // namespace blockcenter::report
