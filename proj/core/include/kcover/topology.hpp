#pragma once

#include <cstdint>
#include <vector>

#include "kcover/node.hpp"
#include "kcover/sim_config.hpp"

namespace kcover {

/// Places the deployment. Grid nodes sit on exact lattice points with ids in
/// row-major order (node 0 at the origin); uniform-random nodes draw their
/// positions from the topology substream of the seed, so the same seed always
/// yields the same deployment no matter what else the run does.
std::vector<SensorNode> generate_topology(const TopologySpec& spec,
                                          std::uint64_t seed,
                                          double sensing_radius,
                                          double comm_radius,
                                          double initial_energy);

}  // namespace kcover
