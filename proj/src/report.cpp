#include "rost/report.hpp"

#include <sstream>

namespace rost {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::refuted:
      return "refuted";
    case Verdict::not_certifiable:
      return "not-certifiable";
  }
  return "not-certifiable";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "verified") return Verdict::verified;
  if (s == "refuted") return Verdict::refuted;
  if (s == "not-certifiable") return Verdict::not_certifiable;
  throw std::invalid_argument("unknown verdict: " + s);
}

void to_json(nlohmann::json& j, const TheoremReport& r) {
  j = nlohmann::json{{"id", r.id},       {"params", r.params},       {"verdict", to_string(r.verdict)},
                     {"left", r.left},   {"right", r.right},         {"witnesses", r.witnesses},
                     {"notes", r.notes}};
}

void from_json(const nlohmann::json& j, TheoremReport& r) {
  r.id = j.at("id").get<std::string>();
  r.params = j.value("params", nlohmann::json::object());
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.left = j.value("left", nlohmann::json::object());
  r.right = j.value("right", nlohmann::json::object());
  r.witnesses = j.value("witnesses", std::vector<std::string>{});
  r.notes = j.value("notes", std::vector<std::string>{});
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream os;
  os << r.id << " " << r.params.dump() << ": " << to_string(r.verdict) << "\n";
  os << "  left:  " << r.left.dump() << "\n";
  os << "  right: " << r.right.dump() << "\n";
  for (const auto& w : r.witnesses) os << "  witness: " << w << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace rost
