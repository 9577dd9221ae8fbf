// presets.hpp - one named scenario per figure panel family.

#pragma once

#include <string>
#include <vector>

#include "cqed/scenario.hpp"

namespace cqed {

struct PresetInfo {
    std::string name;
    std::string figure;          // what the preset reproduces
    std::string runtime_class;   // "seconds", "minute" or "minutes"
};

const std::vector<PresetInfo>& preset_catalog();

bool is_preset(const std::string& name);

// Throws ConfigInvalid for unknown names.
ScenarioConfig preset_config(const std::string& name);

} // namespace cqed
