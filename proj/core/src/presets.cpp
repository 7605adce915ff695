#include "hybridom/presets.hpp"

#include "hybridom/errors.hpp"
#include "preset_data.hpp"

namespace hybridom {

std::vector<std::string> preset_ids() {
  std::vector<std::string> ids;
  for (const auto& p : detail::preset_texts()) ids.emplace_back(p.id);
  return ids;
}

std::string_view preset_text(std::string_view id) {
  for (const auto& p : detail::preset_texts())
    if (id == p.id) return p.text;
  std::string known;
  for (const auto& p : detail::preset_texts()) known += std::string(known.empty() ? "" : ", ") + p.id;
  throw ConfigError("unknown preset '" + std::string(id) + "' (available: " + known + ")", "preset");
}

SweepConfig load_preset(std::string_view id) {
  return parse_config(preset_text(id), "preset:" + std::string(id));
}

}  // namespace hybridom
