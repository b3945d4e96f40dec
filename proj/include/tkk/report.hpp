#ifndef TKK_REPORT_HPP
#define TKK_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tkk {

/// One verification record: a named check, the algebraic law it exercises,
/// how many samples ran, the worst residual seen, and the verdict.
struct CheckRecord {
  std::string name;
  std::string law;
  long samples = 0;
  double max_residual = 0.0;
  bool pass = false;
};

struct Report {
  std::vector<CheckRecord> records;

  bool overall_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  void add(std::string name, std::string law, long samples, double max_residual, bool pass) {
    records.push_back({std::move(name), std::move(law), samples, max_residual, pass});
  }

  void merge(const Report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }
};

nlohmann::json report_to_json(const Report& r);

}  // namespace tkk

#endif
