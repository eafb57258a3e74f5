#pragma once

#include <span>
#include <string>
#include <string_view>

#include "lvpert/model.hpp"
#include "lvpert/series.hpp"

namespace lvpert {

struct CasePreset {
  std::string name;
  ModelParams params;
  PopulationState initial;
  double default_t_end;
  int default_order;

  InitialValueProblem problem() const { return {params, initial, default_t_end}; }
};

/// Registry: "case-I", "case-V" and the "decoupled" b = d = 0 sanity case.
std::span<const CasePreset> presets();

/// Throws LookupError naming the available presets.
const CasePreset& preset(std::string_view name);

}  // namespace lvpert
