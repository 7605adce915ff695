#pragma once

#include <vector>

namespace hybridom::detail {

struct PresetText {
  const char* id;
  const char* text;
};

/// Bundled preset files, sorted by id.
const std::vector<PresetText>& preset_texts();

}  // namespace hybridom::detail
