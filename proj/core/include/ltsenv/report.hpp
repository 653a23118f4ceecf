#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ltsenv {

struct ReportCheck {
  std::string name;
  bool pass = true;
  nlohmann::json witness;  // null when there is nothing to show
};

/// Uniform result of a command:
/// {"command", "system", "checks": [{"name", "pass", "witness"}], "timing_ms"}
/// plus command-specific top-level fields. Numbers that are not counts are
/// written as [num, den].
struct Report {
  std::string command;
  std::string system;
  std::vector<ReportCheck> checks;
  nlohmann::json fields = nlohmann::json::object();
  std::optional<std::int64_t> timing_ms;

  void add(std::string name, bool pass, nlohmann::json witness = nullptr);
  bool ok() const;

  /// Keys are emitted in sorted order, so equal reports serialize to equal
  /// bytes.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace ltsenv
