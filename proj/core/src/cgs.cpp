#include "kcover/cgs.hpp"

#include <algorithm>
#include <unordered_set>

#include "kcover/scheduler_centralized.hpp"

namespace kcover {

const char* to_string(CgsMessageKind kind) {
  switch (kind) {
    case CgsMessageKind::Hello: return "hello";
    case CgsMessageKind::Std: return "std";
    case CgsMessageKind::Awake: return "awake";
  }
  return "?";
}

double shout_delay_from_drowsiness(double drowsiness_value, double c,
                                   double max_delay) {
  if (drowsiness_value <= 0.0) return 0.0;
  return std::min(c / drowsiness_value, max_delay);
}

namespace {

// "Decides later than" order: larger shout delay fires later; exact ties are
// resolved by id so the ordering is total.
bool fires_after(double delay_a, int id_a, double delay_b, int id_b) {
  if (delay_a != delay_b) return delay_a > delay_b;
  return id_a > id_b;
}

}  // namespace

SleepDecision cgs_decide(const CgsNodeState& state, const LocalCoverage& local,
                         int k) {
  const auto& graph = local.graph;
  for (std::size_t r = 0; r < graph.region_count(); ++r) {
    int available = 0;
    for (int sensor_index : graph.sensors_covering(static_cast<int>(r))) {
      if (sensor_index == 0) continue;  // the node itself does not count
      const int neighbor_id = graph.sensor_id(sensor_index);
      if (state.lan.count(neighbor_id) > 0) {
        ++available;
        continue;
      }
      const auto it = state.neighbor_table.find(neighbor_id);
      if (it == state.neighbor_table.end() || !it->second.shout_delay) continue;
      if (fires_after(*it->second.shout_delay, neighbor_id,
                      state.own_shout_delay, state.id)) {
        ++available;
      }
    }
    if (available < k) return SleepDecision::Awake;
  }
  return SleepDecision::Sleep;
}

std::vector<int> ElectionResult::awake_ids() const {
  std::vector<int> out;
  for (const auto& [id, d] : decisions) {
    if (d == SleepDecision::Awake) out.push_back(id);
  }
  return out;
}

std::vector<int> ElectionResult::asleep_ids() const {
  std::vector<int> out;
  for (const auto& [id, d] : decisions) {
    if (d == SleepDecision::Sleep) out.push_back(id);
  }
  return out;
}

ElectionResult run_election(std::span<const SensorNode> nodes,
                            const RegionTemplate& tmpl,
                            const std::optional<Rect>& clip,
                            const ElectionParams& params,
                            const DeliveryFn& deliver,
                            std::span<const int> after_std_deaths,
                            int period) {
  ElectionResult result;

  // Participants, by ascending id. The node array itself may hold dead nodes.
  std::vector<std::size_t> participants;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].alive()) participants.push_back(i);
  }
  std::sort(participants.begin(), participants.end(),
            [&](std::size_t a, std::size_t b) { return nodes[a].id < nodes[b].id; });

  std::map<int, CgsNodeState> states;
  std::map<int, std::size_t> index_of;
  for (std::size_t i : participants) {
    CgsNodeState st;
    st.id = nodes[i].id;
    st.position = nodes[i].position;
    st.energy = nodes[i].energy;
    states.emplace(st.id, std::move(st));
    index_of.emplace(nodes[i].id, i);
  }

  std::unordered_set<int> dead_now;

  int message_index = 0;
  auto broadcast_message = [&](const SensorNode& sender, const ProtocolMessage& msg,
                               double time) {
    std::vector<int> receivers = deliver(message_index, sender, nodes);
    std::erase_if(receivers, [&](int id) { return dead_now.count(id) > 0; });
    result.messages.push_back(
        {period, time, msg.kind, msg.sender, static_cast<int>(receivers.size())});
    result.sent_counts[msg.sender] += 1;
    ++message_index;
    for (int receiver_id : receivers) {
      auto it = states.find(receiver_id);
      if (it == states.end() || receiver_id == msg.sender) continue;
      CgsNodeState& receiver = it->second;
      switch (msg.kind) {
        case CgsMessageKind::Hello:
          receiver.neighbor_table[msg.sender] = {msg.position, std::nullopt};
          break;
        case CgsMessageKind::Std: {
          // a delay from a node whose Hello was lost is unusable: there is
          // no position to judge its coverage by
          auto entry = receiver.neighbor_table.find(msg.sender);
          if (entry != receiver.neighbor_table.end()) {
            entry->second.shout_delay = msg.shout_delay;
          }
          break;
        }
        case CgsMessageKind::Awake:
          if (receiver.neighbor_table.count(msg.sender) > 0) {
            receiver.lan.insert(msg.sender);
          }
          break;
      }
    }
  };

  // Phase 1: Hello broadcasts build the alive-neighbor tables.
  for (std::size_t i : participants) {
    const SensorNode& sender = nodes[i];
    broadcast_message(sender,
                      {CgsMessageKind::Hello, sender.id, sender.position, 0.0},
                      0.0);
  }

  // Phase 2: each node evaluates its local subgraph and picks a shout delay.
  std::map<int, LocalCoverage> locals;
  for (std::size_t i : participants) {
    const SensorNode& self = nodes[i];
    CgsNodeState& st = states.at(self.id);

    std::vector<SensorNode> known;
    known.reserve(st.neighbor_table.size());
    for (const auto& [nid, info] : st.neighbor_table) {
      SensorNode w;
      w.id = nid;
      w.position = info.position;
      w.sensing_radius = self.sensing_radius;  // constant-radius network
      known.push_back(w);
    }

    LocalCoverage local = local_subgraph(self, known, tmpl, clip);
    std::vector<double> ratios;
    ratios.reserve(local.graph.region_count());
    for (std::size_t r = 0; r < local.graph.region_count(); ++r) {
      ratios.push_back(
          coverage_ratio(local.graph.region_degree(static_cast<int>(r)), params.k));
    }
    st.own_drowsiness = drowsiness(self.energy, params.alpha, ratios);
    st.own_shout_delay = shout_delay_from_drowsiness(st.own_drowsiness,
                                                     params.std_c, params.std_max);
    locals.emplace(self.id, std::move(local));
  }

  // Phase 3: Std broadcasts.
  for (std::size_t i : participants) {
    const SensorNode& sender = nodes[i];
    broadcast_message(sender,
                      {CgsMessageKind::Std, sender.id, {},
                       states.at(sender.id).own_shout_delay},
                      0.0);
  }

  // Injected failures: these nodes die right after their Std broadcast, so
  // they never fire a timer, send no Awake message, and receive nothing more.
  for (int id : after_std_deaths) {
    if (states.count(id) > 0) {
      dead_now.insert(id);
      result.died_after_std.push_back(id);
    }
  }

  // Phase 4: timers fire in global (delay, id) order. An Awake broadcast is
  // seen by every later decider within range, subject to loss.
  std::vector<int> firing_order;
  for (std::size_t i : participants) {
    const int id = nodes[i].id;
    if (dead_now.count(id) == 0) firing_order.push_back(id);
  }
  std::sort(firing_order.begin(), firing_order.end(), [&](int a, int b) {
    const double da = states.at(a).own_shout_delay;
    const double db = states.at(b).own_shout_delay;
    if (da != db) return da < db;
    return a < b;
  });

  for (int id : firing_order) {
    CgsNodeState& st = states.at(id);
    st.decision = cgs_decide(st, locals.at(id), params.k);
    result.decisions[id] = st.decision;
    if (st.decision == SleepDecision::Awake) {
      const SensorNode& sender = nodes[index_of.at(id)];
      broadcast_message(sender, {CgsMessageKind::Awake, sender.id, {}, 0.0},
                        st.own_shout_delay);
    }
  }

  return result;
}

}  // namespace kcover
