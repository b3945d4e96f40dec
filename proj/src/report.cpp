#include "tkk/report.hpp"

#include <nlohmann/json.hpp>

namespace tkk {

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"check", rec.name},
                       {"law", rec.law},
                       {"samples", rec.samples},
                       {"max_residual", rec.max_residual},
                       {"pass", rec.pass}});
  }
  return {{"overall_pass", r.overall_pass()}, {"records", records}};
}

}  // namespace tkk
