#pragma once

#include <string>

#include "lifter/context.hpp"
#include "lifter/goal_format.hpp"

namespace testfix {

inline std::string path(const std::string& name) {
  return std::string(LIFTER_FIXTURES_DIR) + "/" + name;
}

inline const lifter::ProofContext& itrev_context() {
  static const lifter::ProofContext ctx =
      lifter::ProofContext::load_file(path("itrev_context.json"));
  return ctx;
}

inline const lifter::Goal& itrev_goal() {
  static const lifter::Goal goal =
      lifter::load_goal_file(path("itrev.goal"), itrev_context().constant_types());
  return goal;
}

}  // namespace testfix
