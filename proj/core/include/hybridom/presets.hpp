#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybridom/config.hpp"

namespace hybridom {

/// Ids of the bundled figure presets (fig2a, fig2b, fig3a..d, fig4a, fig4b, fig5a, fig5b).
std::vector<std::string> preset_ids();

/// Raw YAML of a preset. Throws ConfigError for unknown ids.
std::string_view preset_text(std::string_view id);

SweepConfig load_preset(std::string_view id);

}  // namespace hybridom
