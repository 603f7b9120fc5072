#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hexset/cards.hpp"
#include "hexset/hex.hpp"
#include "hexset/rng.hpp"

namespace hexset {

// The queue of pending instructions, the current turn-taker and the steps
// remaining in the turn.
struct InteractionState {
  std::deque<std::string> queue;
  Agent turn_taker = Agent::Leader;
  int steps_remaining = 0;

  friend bool operator==(const InteractionState& a, const InteractionState& b) {
    return a.queue == b.queue && a.turn_taker == b.turn_taker &&
           a.steps_remaining == b.steps_remaining;
  }
  friend bool operator!=(const InteractionState& a, const InteractionState& b) {
    return !(a == b);
  }
};

struct TurnConfig {
  int leader_steps = 5;
  int follower_steps = 10;
  int initial_turns = 12;  // six turns each
  std::vector<int> bonus_schedule = {16, 12, 8, 6, 4, 2, 1};  // then 0
  int max_turn_cap = 65;
  double leader_time_s = 45.0;
  double follower_time_s = 15.0;

  int steps_for(Agent a) const {
    return a == Agent::Leader ? leader_steps : follower_steps;
  }
  // Bonus turns for the k-th completed set, k starting at 1.
  int bonus(int k) const {
    if (k < 1 || k > static_cast<int>(bonus_schedule.size())) return 0;
    return bonus_schedule[k - 1];
  }
  // Throws ConfigError when initial_turns plus the whole schedule exceeds the
  // turn cap, or when a field is out of range.
  void validate() const;

  friend bool operator==(const TurnConfig& a, const TurnConfig& b) {
    return a.leader_steps == b.leader_steps && a.follower_steps == b.follower_steps &&
           a.initial_turns == b.initial_turns && a.bonus_schedule == b.bonus_schedule &&
           a.max_turn_cap == b.max_turn_cap && a.leader_time_s == b.leader_time_s &&
           a.follower_time_s == b.follower_time_s;
  }
};

struct GameAction {
  enum class Kind : uint8_t { World = 0, Instruct, Done, Timeout };
  Kind kind = Kind::Done;
  WorldAction move = WorldAction::MF;  // when kind == World
  std::string text;                    // when kind == Instruct

  static GameAction world(WorldAction a) { return {Kind::World, a, {}}; }
  static GameAction instruct(std::string t) {
    return {Kind::Instruct, WorldAction::MF, std::move(t)};
  }
  static GameAction done() { return {Kind::Done, WorldAction::MF, {}}; }
  static GameAction timeout() { return {Kind::Timeout, WorldAction::MF, {}}; }

  friend bool operator==(const GameAction& a, const GameAction& b) {
    return a.kind == b.kind &&
           (a.kind != Kind::World || a.move == b.move) &&
           (a.kind != Kind::Instruct || a.text == b.text);
  }
  friend bool operator!=(const GameAction& a, const GameAction& b) { return !(a == b); }
};

struct Effect {
  enum class Kind : uint8_t {
    Toggle,       // hex, selected
    SetComplete,  // hexes + cards removed
    Spawn,        // hexes + cards placed
    Bonus,        // added turns
    Turn,         // handover: taker, steps, turns_remaining after decrement
    Reject,       // reason
    GameOver,
  };
  Kind kind = Kind::Toggle;
  HexCoord hex;
  bool selected = false;
  std::vector<HexCoord> hexes;
  std::vector<Card> cards;
  int added = 0;
  Agent taker = Agent::Leader;
  int steps = 0;
  int turns_remaining = 0;
  std::string reason;

  friend bool operator==(const Effect& a, const Effect& b) {
    return a.kind == b.kind && a.hex == b.hex && a.selected == b.selected &&
           a.hexes == b.hexes && a.cards == b.cards && a.added == b.added &&
           a.taker == b.taker && a.steps == b.steps &&
           a.turns_remaining == b.turns_remaining && a.reason == b.reason;
  }
};

struct Event {
  int index = 0;
  Agent actor = Agent::Leader;
  GameAction action;
  std::vector<Effect> effects;

  friend bool operator==(const Event& a, const Event& b) {
    return a.index == b.index && a.actor == b.actor && a.action == b.action &&
           a.effects == b.effects;
  }
};

// Pluggable card spawner so evaluation can replay recorded spawns instead of
// drawing fresh ones.
class SpawnSource {
 public:
  virtual ~SpawnSource() = default;
  // Removes `removed` and places three cards; must be deterministic.
  virtual WorldState respawn(const WorldState& s, const std::vector<HexCoord>& removed,
                             Rng& rng, const Vocab& vocab) = 0;
};

class RngSpawnSource final : public SpawnSource {
 public:
  WorldState respawn(const WorldState& s, const std::vector<HexCoord>& removed, Rng& rng,
                     const Vocab& vocab) override {
    return respawn_cards(s, removed, rng, vocab);
  }
};

struct TapedSpawn {
  HexCoord hex;
  Card card;

  friend bool operator==(const TapedSpawn& a, const TapedSpawn& b) {
    return a.hex == b.hex && a.card == b.card;
  }
};

// Replays recorded spawns in order. A taped card whose hex already holds a
// card is dropped; agents standing on the hex do not block placement (and a
// spawn never toggles). Falls back to rng draws when the tape runs out.
class TapeSpawnSource final : public SpawnSource {
 public:
  explicit TapeSpawnSource(std::vector<TapedSpawn> tape) : tape_(std::move(tape)) {}
  WorldState respawn(const WorldState& s, const std::vector<HexCoord>& removed, Rng& rng,
                     const Vocab& vocab) override;
  size_t cursor() const { return cursor_; }

 private:
  std::vector<TapedSpawn> tape_;
  size_t cursor_ = 0;
};

struct GameState {
  WorldState world;
  InteractionState interaction;
  TurnConfig config;
  Vocab vocab = Vocab::defaults();
  int score = 0;
  int sets_completed = 0;
  int turns_remaining = 0;
  bool over = false;
  Rng rng;
  std::vector<Event> log;

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.world == b.world && a.interaction == b.interaction && a.config == b.config &&
           a.vocab == b.vocab && a.score == b.score &&
           a.sets_completed == b.sets_completed &&
           a.turns_remaining == b.turns_remaining && a.over == b.over && a.rng == b.rng &&
           a.log == b.log;
  }
};

GameState make_game(WorldState world, TurnConfig config, uint64_t seed,
                    Vocab vocab = Vocab::defaults());

// Result of one pure transition-rule application (no scoring, no log).
struct TransitionResult {
  WorldState world;
  InteractionState interaction;
  int rule = 0;  // 1..8, 0 when the world action was rejected
  MoveEffect move;
  bool handover = false;  // a turn ended (rules 2, 3, 6, 7)
};

// The eight-rule interaction transition. Throws OutOfDomainError outside the
// rule domains (follower instructing, world actions at zero steps, follower
// holding the turn with an empty queue, actor out of turn). Illegal world
// moves are returned as a rejection that costs no step.
TransitionResult transition(const WorldState& s, const InteractionState& g, Agent actor,
                            const GameAction& a, const TurnConfig& cfg);

// Full game step: transition + completion scoring + respawn + turn-counter
// bookkeeping + event log. Returns the effects of this step (also appended to
// g.log).
std::vector<Effect> step(GameState& g, Agent actor, const GameAction& a,
                         SpawnSource* spawns = nullptr);

// Turn handover without an action, used for follower timer expiry (the
// pending instruction stays queued). Logged with a Timeout action.
std::vector<Effect> force_turn_end(GameState& g);

struct LegalActionOptions {
  // Mirrors the UI nudge: the leader cannot end a turn while the queue is
  // empty. Off in headless mode.
  bool forbid_leader_done_on_empty_queue = false;
};

std::vector<GameAction> legal_actions(const GameState& g,
                                      const LegalActionOptions& opts = {});

}  // namespace hexset
