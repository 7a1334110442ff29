#pragma once

#include "kcover/geometry.hpp"

namespace kcover {

enum class NodeState { Awake, Asleep, Dead };

enum class SleepDecision { Sleep, Awake };

/// One deployed sensor. The lifecycle state is owned by the simulation
/// engine; schedulers only produce decisions.
struct SensorNode {
  int id = 0;
  Point2D position;
  double sensing_radius = 0.0;
  double comm_radius = 0.0;
  double energy = 0.0;
  NodeState state = NodeState::Awake;

  bool alive() const { return state != NodeState::Dead; }
  bool awake() const { return state == NodeState::Awake; }
};

}  // namespace kcover
