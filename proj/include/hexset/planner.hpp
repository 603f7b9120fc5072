#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hexset/hex.hpp"

namespace hexset {

// Goal of a pose-space search.
struct PathGoal {
  enum class Kind : uint8_t { ExactPose, Position, CardHex };
  Kind kind = Kind::Position;
  AgentPose pose;   // ExactPose
  HexCoord hex;     // Position / CardHex

  static PathGoal exact(AgentPose p) { return {Kind::ExactPose, p, p.position}; }
  static PathGoal position(HexCoord c) { return {Kind::Position, {}, c}; }
  static PathGoal card(HexCoord c) { return {Kind::CardHex, {}, c}; }
};

struct PathQuery {
  const WorldState* world = nullptr;
  Agent actor = Agent::Follower;  // the other agent's hex is an obstacle
  AgentPose start;
  PathGoal goal;
  std::set<HexCoord> forbidden;  // hexes the path must never enter
  // Hexes that end further expansion once entered (a card the final move may
  // toggle); entering them mid-path is thereby impossible.
  std::set<HexCoord> terminal;
};

// Breadth-first search over (position, heading) with unit-cost MF/MB/RL/RR.
// Ties break deterministically by the fixed action order MF < MB < RL < RR.
// Returns std::nullopt when the goal is unreachable.
std::optional<std::vector<WorldAction>> shortest_path(const PathQuery& q);

// Convenience: number of actions to reach the goal, or nullopt.
std::optional<int> path_cost(const PathQuery& q);

// Greedy nearest-target tour that toggles exactly the target cards: each leg
// forbids every card hex except the leg's own target. Returns nullopt if any
// target is unreachable under the constraints.
std::optional<std::vector<WorldAction>> plan_card_tour(const WorldState& world, Agent actor,
                                                       const AgentPose& start,
                                                       const std::set<HexCoord>& targets,
                                                       const std::set<HexCoord>& protected_hexes);

}  // namespace hexset
