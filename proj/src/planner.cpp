#include "hexset/planner.hpp"

#include <algorithm>
#include <deque>

namespace hexset {

namespace {

constexpr std::array<WorldAction, 4> kActionOrder = {WorldAction::MF, WorldAction::MB,
                                                     WorldAction::RL, WorldAction::RR};

struct Node {
  HexCoord pos;
  Heading heading;
};

int node_index(const WorldState& w, const Node& n) {
  return (n.pos.r * w.width + n.pos.q) * 6 + n.heading.direction;
}

std::optional<Node> successor(const WorldState& w, Agent actor, const Node& n,
                              WorldAction a, const std::set<HexCoord>& forbidden) {
  switch (a) {
    case WorldAction::RL:
      return Node{n.pos, n.heading.left()};
    case WorldAction::RR:
      return Node{n.pos, n.heading.right()};
    case WorldAction::MF:
    case WorldAction::MB: {
      const Heading dir = (a == WorldAction::MF) ? n.heading : n.heading.opposite();
      const HexCoord target = neighbor(n.pos, dir);
      if (!w.passable(target)) return std::nullopt;
      if (target == w.pose(other_agent(actor)).position) return std::nullopt;
      if (forbidden.count(target)) return std::nullopt;
      return Node{target, n.heading};
    }
  }
  return std::nullopt;
}

// A CardHex goal is satisfied only by *entering* the hex (the entry performs
// the toggle), so rotations in place and starting on the hex do not count.
bool satisfies(const PathGoal& goal, const Node& n, bool entered_by_move) {
  switch (goal.kind) {
    case PathGoal::Kind::ExactPose:
      return n.pos == goal.pose.position && n.heading == goal.pose.heading;
    case PathGoal::Kind::Position:
      return n.pos == goal.hex;
    case PathGoal::Kind::CardHex:
      return entered_by_move && n.pos == goal.hex;
  }
  return false;
}

}  // namespace

std::optional<std::vector<WorldAction>> shortest_path(const PathQuery& q) {
  const WorldState& w = *q.world;
  if (!w.passable(q.start.position)) return std::nullopt;

  std::vector<int32_t> parent(static_cast<size_t>(w.width) * w.height * 6, -1);
  std::vector<uint8_t> parent_action(parent.size(), 0);

  Node start{q.start.position, q.start.heading};
  const int start_idx = node_index(w, start);
  parent[start_idx] = start_idx;  // self-parent marks visited
  if (satisfies(q.goal, start, false)) return std::vector<WorldAction>{};

  std::deque<Node> frontier{start};
  while (!frontier.empty()) {
    Node cur = frontier.front();
    frontier.pop_front();
    if (q.terminal.count(cur.pos) && !(cur.pos == q.start.position)) continue;

    for (WorldAction a : kActionOrder) {
      auto next = successor(w, q.actor, cur, a, q.forbidden);
      if (!next) continue;
      const bool entered = (a == WorldAction::MF || a == WorldAction::MB);
      if (satisfies(q.goal, *next, entered)) {
        std::vector<WorldAction> path{a};
        int at = node_index(w, cur);
        while (at != start_idx) {
          path.push_back(static_cast<WorldAction>(parent_action[at]));
          at = parent[at];
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      const int idx = node_index(w, *next);
      if (parent[idx] != -1) continue;
      parent[idx] = node_index(w, cur);
      parent_action[idx] = static_cast<uint8_t>(a);
      frontier.push_back(*next);
    }
  }
  return std::nullopt;
}

std::optional<int> path_cost(const PathQuery& q) {
  auto p = shortest_path(q);
  if (!p) return std::nullopt;
  return static_cast<int>(p->size());
}

std::optional<std::vector<WorldAction>> plan_card_tour(const WorldState& world, Agent actor,
                                                       const AgentPose& start,
                                                       const std::set<HexCoord>& targets,
                                                       const std::set<HexCoord>& protected_hexes) {
  WorldState sim = world;
  AgentPose pose = start;
  std::set<HexCoord> remaining = targets;
  std::vector<WorldAction> tour;

  while (!remaining.empty()) {
    std::optional<HexCoord> best;
    std::optional<std::vector<WorldAction>> best_leg;
    for (const HexCoord& target : remaining) {
      PathQuery q;
      q.world = &sim;
      q.actor = actor;
      q.start = pose;
      q.goal = PathGoal::card(target);
      q.terminal = {target};
      for (const auto& [hex, card] : sim.cards)
        if (hex != target) q.forbidden.insert(hex);
      for (const auto& hex : protected_hexes) q.forbidden.insert(hex);
      auto leg = shortest_path(q);
      if (!leg) continue;
      if (!best_leg || leg->size() < best_leg->size() ||
          (leg->size() == best_leg->size() && target < *best)) {
        best = target;
        best_leg = std::move(leg);
      }
    }
    if (!best_leg) return std::nullopt;

    for (WorldAction a : *best_leg) {
      WorldStepResult r = apply_world_action(sim, actor, a);
      if (r.effect.rejected) return std::nullopt;
      sim = std::move(r.state);
      tour.push_back(a);
    }
    pose = sim.pose(actor);
    remaining.erase(*best);
  }
  return tour;
}

}  // namespace hexset
