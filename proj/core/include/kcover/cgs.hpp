#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kcover/coverage_graph.hpp"
#include "kcover/node.hpp"

namespace kcover {

// The protocol exchanges exactly three message kinds per period:
//   Hello  - announces the sender and its position,
//   Std    - announces the sender's shout time delay,
//   Awake  - announces a commitment to stay awake this period.
enum class CgsMessageKind { Hello, Std, Awake };

const char* to_string(CgsMessageKind kind);

struct ProtocolMessage {
  CgsMessageKind kind = CgsMessageKind::Hello;
  int sender = 0;
  Point2D position;          // Hello payload
  double shout_delay = 0.0;  // Std payload, seconds
};

/// One line of the message log: who broadcast what, when, and how many nodes
/// actually received it through the lossy channel.
struct MessageRecord {
  int period = 0;
  double time = 0.0;
  CgsMessageKind kind = CgsMessageKind::Hello;
  int sender = 0;
  int receiver_count = 0;
};

struct NeighborInfo {
  Point2D position;
  std::optional<double> shout_delay;  // unknown until the Std message arrives
};

/// Everything one node knows during an election round. Knowledge accrues only
/// through received messages; neighbors whose Hello was lost simply do not
/// exist for this node.
struct CgsNodeState {
  int id = 0;
  Point2D position;
  double energy = 0.0;
  std::map<int, NeighborInfo> neighbor_table;  // alive neighbors, by id
  std::set<int> lan;                           // neighbors committed to stay awake
  double own_shout_delay = 0.0;
  double own_drowsiness = -1.0;
  SleepDecision decision = SleepDecision::Awake;
};

/// Maps drowsiness to a shout time delay: forced-awake nodes (non-positive
/// drowsiness) announce immediately, others wait c / drowsiness seconds capped
/// at max_delay, so drowsier nodes speak earlier.
double shout_delay_from_drowsiness(double drowsiness_value, double c,
                                   double max_delay);

/// The sleep test a node runs when its own timer expires: sleep only if every
/// local cell keeps at least k coverers among neighbors that either committed
/// to stay awake (LAN) or will decide strictly later (larger shout delay,
/// ties broken by id). The node itself never counts.
SleepDecision cgs_decide(const CgsNodeState& state, const LocalCoverage& local,
                         int k);

struct ElectionParams {
  int k = 1;
  double alpha = 2.0;
  double std_c = 1.0;    // shout delay = std_c / drowsiness
  double std_max = 10.0; // clamp, seconds
};

/// Channel hook: given the running message index and the sender, returns the
/// ids of nodes that actually receive the broadcast. Implementations decide
/// range and loss; tests can script arbitrary delivery patterns.
using DeliveryFn = std::function<std::vector<int>(
    int message_index, const SensorNode& sender,
    std::span<const SensorNode> nodes)>;

struct ElectionResult {
  std::map<int, SleepDecision> decisions;  // per surviving alive node
  std::vector<int> died_after_std;         // injected mid-round failures
  std::vector<MessageRecord> messages;
  std::map<int, int> sent_counts;          // messages broadcast per node

  std::vector<int> awake_ids() const;
  std::vector<int> asleep_ids() const;
};

/// Runs one full election round over the alive nodes: Hello broadcasts build
/// neighbor tables, each node derives its drowsiness from its local subgraph
/// and broadcasts its shout delay, then timers fire in global delay order and
/// each node either sleeps silently or commits with an Awake broadcast.
///
/// Nodes listed in after_std_deaths fail right after broadcasting their Std
/// message: their timer never fires and they send no Awake message. If clip
/// is given, local template cells outside it are ignored.
ElectionResult run_election(std::span<const SensorNode> nodes,
                            const RegionTemplate& tmpl,
                            const std::optional<Rect>& clip,
                            const ElectionParams& params,
                            const DeliveryFn& deliver,
                            std::span<const int> after_std_deaths = {},
                            int period = 1);

}  // namespace kcover
