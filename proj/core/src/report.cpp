#include <cstdio>
#include <sstream>

#include "coverdepth/lab.hpp"

namespace coverdepth {

std::string instance_hash(const nlohmann::json& instance) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : instance.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Vertex count of the graph under test, or the ring size for ideals.
std::string instance_size(const nlohmann::json& instance) {
  if (instance.is_object()) {
    if (instance.contains("graph")) return std::to_string(instance["graph"].value("n", 0));
    if (instance.contains("num_vars")) return std::to_string(instance["num_vars"].get<std::size_t>());
  }
  return "";
}

}  // namespace

std::string report_json(const std::vector<VerificationOutcome>& outcomes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& o : outcomes) out.push_back(o.to_json());
  return out.dump(2) + "\n";
}

std::string report_csv(const std::vector<VerificationOutcome>& outcomes) {
  std::ostringstream out;
  out << "theorem_id,n,instance_hash,status\n";
  for (const auto& o : outcomes) {
    out << o.theorem_id << "," << instance_size(o.instance) << "," << instance_hash(o.instance) << ","
        << to_string(o.status) << "\n";
  }
  return out.str();
}

std::string report_text(const std::vector<VerificationOutcome>& outcomes) {
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << to_string(o.status) << " " << o.theorem_id << " n=" << instance_size(o.instance) << " "
        << instance_hash(o.instance);
    if (o.status == OutcomeStatus::skipped && o.details.contains("skip_reason")) {
      out << " (" << o.details["skip_reason"].get<std::string>() << ")";
    }
    out << "\n";
    if (o.status == OutcomeStatus::failed) {
      out << "  instance: " << o.instance.dump() << "\n  details: " << o.details.dump() << "\n";
    }
  }
  const OutcomeSummary s = summarize(outcomes);
  out << "summary: " << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
  return out.str();
}

}  // namespace coverdepth
