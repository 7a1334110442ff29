#pragma once

#include <stdexcept>

#include "kcover/node.hpp"

namespace kcover {

/// Randomized independent sleeping: every node flips the same coin each
/// period, with no communication and no coverage check of any kind.
struct RandomPolicy {
  double p_sleep = 0.0;
};

/// draw must come from the node's own per-period substream so that decisions
/// are reproducible regardless of iteration order.
inline SleepDecision decide_random(const RandomPolicy& policy, double draw) {
  if (policy.p_sleep < 0.0 || policy.p_sleep > 1.0) {
    throw std::invalid_argument("p_sleep must lie in [0, 1]");
  }
  return draw < policy.p_sleep ? SleepDecision::Sleep : SleepDecision::Awake;
}

}  // namespace kcover
