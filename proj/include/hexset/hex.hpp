#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexset/cards.hpp"

namespace hexset {

// Axial hex coordinate. Heading 0 points along +q and headings proceed
// counter-clockwise in 60-degree increments; all serialized data depends on
// this convention.
struct HexCoord {
  int q = 0;
  int r = 0;

  friend bool operator==(const HexCoord& a, const HexCoord& b) {
    return a.q == b.q && a.r == b.r;
  }
  friend bool operator!=(const HexCoord& a, const HexCoord& b) { return !(a == b); }
  friend bool operator<(const HexCoord& a, const HexCoord& b) {
    return a.q != b.q ? a.q < b.q : a.r < b.r;
  }
};

std::ostream& operator<<(std::ostream& os, const HexCoord& c);

// Direction in {0..5}, always reduced modulo 6.
struct Heading {
  int direction = 0;

  Heading() = default;
  explicit Heading(int d) : direction(((d % 6) + 6) % 6) {}

  Heading left() const { return Heading(direction + 1); }
  Heading right() const { return Heading(direction + 5); }
  Heading opposite() const { return Heading(direction + 3); }

  friend bool operator==(const Heading& a, const Heading& b) {
    return a.direction == b.direction;
  }
  friend bool operator!=(const Heading& a, const Heading& b) { return !(a == b); }
};

inline constexpr std::array<std::pair<int, int>, 6> kHexDirections = {{
    {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1},
}};

HexCoord neighbor(const HexCoord& c, const Heading& h);
int hex_distance(const HexCoord& a, const HexCoord& b);

struct AgentPose {
  HexCoord position;
  Heading heading;

  friend bool operator==(const AgentPose& a, const AgentPose& b) {
    return a.position == b.position && a.heading == b.heading;
  }
  friend bool operator!=(const AgentPose& a, const AgentPose& b) { return !(a == b); }
};

enum class PropKind : uint8_t { Tree = 0, Hut, Bush, Rock, Pond };

inline constexpr std::array<const char*, 5> kPropKindNames = {"tree", "hut", "bush",
                                                              "rock", "pond"};

struct Prop {
  PropKind kind = PropKind::Tree;
  std::optional<uint8_t> color;  // index into the color vocabulary

  friend bool operator==(const Prop& a, const Prop& b) {
    return a.kind == b.kind && a.color == b.color;
  }
};

enum class Agent : uint8_t { Leader = 0, Follower = 1 };

inline Agent other_agent(Agent a) {
  return a == Agent::Leader ? Agent::Follower : Agent::Leader;
}

const char* agent_name(Agent a);

enum class WorldAction : uint8_t { MF = 0, MB, RL, RR };

inline constexpr std::array<const char*, 4> kWorldActionNames = {"MF", "MB", "RL", "RR"};

std::optional<WorldAction> world_action_from_name(const std::string& name);

struct WorldState {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> terrain;  // 1 = passable ground, row-major [r*width + q]
  std::map<HexCoord, Prop> props;
  std::map<HexCoord, Card> cards;
  AgentPose leader;
  AgentPose follower;

  bool in_bounds(const HexCoord& c) const {
    return c.q >= 0 && c.q < width && c.r >= 0 && c.r < height;
  }
  // Passable for movement: on-map ground without a prop.
  bool passable(const HexCoord& c) const {
    return in_bounds(c) && terrain[static_cast<size_t>(c.r) * width + c.q] != 0 &&
           props.find(c) == props.end();
  }
  const AgentPose& pose(Agent a) const { return a == Agent::Leader ? leader : follower; }
  AgentPose& pose(Agent a) { return a == Agent::Leader ? leader : follower; }

  friend bool operator==(const WorldState& a, const WorldState& b) {
    return a.width == b.width && a.height == b.height && a.terrain == b.terrain &&
           a.props == b.props && a.cards == b.cards && a.leader == b.leader &&
           a.follower == b.follower;
  }
  friend bool operator!=(const WorldState& a, const WorldState& b) { return !(a == b); }
};

WorldState make_open_world(int width, int height);

// Result of applying one world action. Rejected actions leave the state
// unchanged and cost no step.
struct MoveEffect {
  bool rejected = false;
  std::string reject_reason;  // "off_map", "impassable", "occupied"
  bool moved = false;
  bool rotated = false;
  HexCoord from;
  HexCoord to;
  bool toggled_card = false;
  HexCoord card_hex;
  bool card_now_selected = false;
};

struct WorldStepResult {
  WorldState state;
  MoveEffect effect;
};

WorldStepResult apply_world_action(const WorldState& s, Agent actor, WorldAction a);

// Binary property planes over the grid, plane-major then row-major.
struct StateTensor {
  int width = 0;
  int height = 0;
  std::vector<std::string> vocabulary;
  std::vector<uint8_t> planes;  // vocabulary.size() * width * height entries in {0,1}

  int property_count() const { return static_cast<int>(vocabulary.size()); }
  uint8_t at(int plane, const HexCoord& c) const {
    return planes[(static_cast<size_t>(plane) * height + c.r) * width + c.q];
  }
};

StateTensor encode_state(const WorldState& s, const Vocab& vocab = Vocab::defaults());

// Versioned export: one JSON header line, then P*W*H bytes (each 0 or 1).
void write_state_tensor(const StateTensor& t, std::ostream& os);
StateTensor read_state_tensor(std::istream& is);

}  // namespace hexset
