#include "lvpert/presets.hpp"

#include <string>
#include <vector>

#include "lvpert/errors.hpp"

namespace lvpert {
namespace {

std::vector<CasePreset> build_registry() {
  return {
      // Fig. 1 populations; order 10 brackets the 4-6 terms of the critiqued works.
      {"case-I", ModelParams::make(1.0, 1.0, 0.1, 1.0), {14.0, 18.0}, 10.0, 10},
      // Six terms is the truncation whose phase curve crosses itself.
      {"case-V", ModelParams::make(1.0, 1.0, 1.0, 1.0), {3.0, 2.0}, 10.0, 5},
      {"decoupled", ModelParams::decoupled(1.0, 1.0), {1.0, 1.0}, 1.0, 30},
  };
}

}  // namespace

std::span<const CasePreset> presets() {
  static const std::vector<CasePreset> registry = build_registry();
  return registry;
}

const CasePreset& preset(std::string_view name) {
  for (const CasePreset& p : presets()) {
    if (p.name == name) return p;
  }
  std::string known;
  for (const CasePreset& p : presets()) {
    if (!known.empty()) known += ", ";
    known += p.name;
  }
  throw LookupError("unknown preset '" + std::string(name) + "'; available: " + known);
}

}  // namespace lvpert
