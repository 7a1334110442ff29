#include "kcover/topology.hpp"

#include "kcover/rng.hpp"

namespace kcover {

std::vector<SensorNode> generate_topology(const TopologySpec& spec,
                                          std::uint64_t seed,
                                          double sensing_radius,
                                          double comm_radius,
                                          double initial_energy) {
  std::vector<SensorNode> nodes;

  auto make_node = [&](int id, Point2D pos) {
    SensorNode n;
    n.id = id;
    n.position = pos;
    n.sensing_radius = sensing_radius;
    n.comm_radius = comm_radius;
    n.energy = initial_energy;
    n.state = NodeState::Awake;
    return n;
  };

  if (spec.kind == TopologyKind::Grid) {
    if (spec.rows < 1 || spec.cols < 1) throw ConfigError("grid must have nodes");
    nodes.reserve(static_cast<std::size_t>(spec.rows) * spec.cols);
    for (int r = 0; r < spec.rows; ++r) {
      for (int c = 0; c < spec.cols; ++c) {
        nodes.push_back(make_node(r * spec.cols + c,
                                  {c * spec.spacing_m, r * spec.spacing_m}));
      }
    }
  } else {
    if (spec.count < 1) throw ConfigError("deployment must have nodes");
    SubstreamRng rng(seed, kStreamTopology);
    nodes.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
      const double x = spec.width_m * rng.next_double();
      const double y = spec.height_m * rng.next_double();
      nodes.push_back(make_node(i, {x, y}));
    }
  }
  return nodes;
}

}  // namespace kcover
