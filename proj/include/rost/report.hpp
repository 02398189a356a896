#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace rost {

enum class Verdict { verified, refuted, not_certifiable };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct TheoremReport {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::not_certifiable;
  nlohmann::json left = nlohmann::json::object();
  nlohmann::json right = nlohmann::json::object();
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool operator==(const TheoremReport&) const = default;
};

void to_json(nlohmann::json& j, const TheoremReport& r);
void from_json(const nlohmann::json& j, TheoremReport& r);

/// Human-readable summary used by --format text.
std::string to_text(const TheoremReport& r);

/// Malformed or out-of-range parameters; the CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rost
