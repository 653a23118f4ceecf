#include "ltsenv/report.hpp"

#include <sstream>

namespace ltsenv {

void Report::add(std::string name, bool pass, nlohmann::json witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

bool Report::ok() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out = fields;
  out["command"] = command;
  out["system"] = system;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  out["checks"] = cs;
  if (timing_ms) out["timing_ms"] = *timing_ms;
  return out;
}

namespace {

std::string render(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  if (!system.empty()) os << "system: " << system << '\n';
  for (const auto& [k, v] : fields.items()) os << k << ": " << render(v) << '\n';
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.witness.is_null()) os << "  " << render(c.witness);
    os << '\n';
    if (!c.pass) ++failed;
  }
  if (timing_ms) os << "timing_ms: " << *timing_ms << '\n';
  if (!checks.empty()) {
    if (failed == 0) {
      os << "result: " << checks.size() << " checks passed\n";
    } else {
      os << "result: " << failed << " of " << checks.size() << " checks failed\n";
    }
  }
  return os.str();
}

}  // namespace ltsenv
