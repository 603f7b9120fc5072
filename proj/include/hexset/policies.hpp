#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hexset/engine.hpp"

namespace hexset {

// What a follower policy sees when asked to act: the full world (policies run
// with full observability), the interaction state and the event log so far.
struct Observation {
  const WorldState& world;
  const InteractionState& interaction;
  const TurnConfig& config;
  const Vocab& vocab;
  std::span<const Event> history;
};

struct GameStartInfo {
  const WorldState* world = nullptr;
  const TurnConfig* config = nullptr;
  uint64_t seed = 0;
};

class FollowerPolicy {
 public:
  virtual ~FollowerPolicy() = default;
  virtual void reset(const GameStartInfo& info) { (void)info; }
  // Never returns Instruct.
  virtual GameAction decide(const Observation& obs) = 0;
};

// --- restricted instruction grammar ---------------------------------------
// The grammar is small and versioned (docs/grammar.ebnf); it is a harness
// baseline, not a language-understanding component.

struct CardFilter {
  std::optional<int> count;
  std::optional<uint8_t> color;  // index into Vocab::colors
  std::optional<uint8_t> shape;  // index into Vocab::shapes

  bool matches(const Card& c) const {
    return (!count || c.count == *count) && (!color || c.color == *color) &&
           (!shape || c.shape == *shape);
  }
  friend bool operator==(const CardFilter& a, const CardFilter& b) {
    return a.count == b.count && a.color == b.color && a.shape == b.shape;
  }
};

struct Directive {
  enum class Kind : uint8_t { NoOp = 0, CardTargets, Move };
  enum class MovePattern : uint8_t { Forward, TurnAround, TurnLeft, TurnRight };

  Kind kind = Kind::NoOp;
  std::vector<CardFilter> filters;  // CardTargets
  bool select = true;               // CardTargets: select vs deselect
  MovePattern pattern = MovePattern::Forward;
  int forward_steps = 0;
};

// Total and deterministic; anything the grammar cannot match is NoOp.
Directive parse_instruction(const std::string& text, const Vocab& vocab = Vocab::defaults());

// --- baselines --------------------------------------------------------------

std::unique_ptr<FollowerPolicy> make_template_follower();
std::unique_ptr<FollowerPolicy> make_random_policy(uint64_t seed);

// Replays a recorded follower action sequence verbatim; throws DesyncError
// when a recorded action is illegal in the live state or the recording runs
// out while the harness still asks for actions.
std::unique_ptr<FollowerPolicy> make_static_oracle(std::vector<GameAction> follower_actions);

// Registry used by the CLI and server: "template" or "random".
std::unique_ptr<FollowerPolicy> make_policy_by_name(const std::string& name, uint64_t seed);
std::vector<std::string> policy_names();

}  // namespace hexset
