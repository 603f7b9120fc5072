#include "hexset/engine.hpp"

#include <algorithm>
#include <numeric>

#include "hexset/errors.hpp"

namespace hexset {

void TurnConfig::validate() const {
  if (leader_steps < 1 || follower_steps < 1) throw ConfigError("steps per turn must be >= 1");
  if (initial_turns < 1) throw ConfigError("initial_turns must be >= 1");
  for (int b : bonus_schedule)
    if (b < 0) throw ConfigError("bonus_schedule entries must be non-negative");
  const int total =
      initial_turns + std::accumulate(bonus_schedule.begin(), bonus_schedule.end(), 0);
  if (total > max_turn_cap)
    throw ConfigError("initial_turns + bonus schedule exceeds the turn cap of " +
                      std::to_string(max_turn_cap));
}

WorldState TapeSpawnSource::respawn(const WorldState& s,
                                    const std::vector<HexCoord>& removed, Rng& rng,
                                    const Vocab& vocab) {
  if (cursor_ + 3 > tape_.size()) return respawn_cards(s, removed, rng, vocab);
  WorldState out = s;
  for (const auto& hex : removed) out.cards.erase(hex);
  for (int i = 0; i < 3; ++i) {
    const TapedSpawn& spawn = tape_[cursor_++];
    if (out.cards.count(spawn.hex)) continue;  // deviated rollout left a card here
    Card card = spawn.card;
    card.selected = false;
    out.cards[spawn.hex] = card;
  }
  return out;
}

GameState make_game(WorldState world, TurnConfig config, uint64_t seed, Vocab vocab) {
  config.validate();
  GameState g;
  g.world = std::move(world);
  g.config = config;
  g.vocab = std::move(vocab);
  g.interaction.turn_taker = Agent::Leader;
  g.interaction.steps_remaining = config.leader_steps;
  g.turns_remaining = config.initial_turns;
  g.rng = Rng(seed);
  return g;
}

TransitionResult transition(const WorldState& s, const InteractionState& g, Agent actor,
                            const GameAction& a, const TurnConfig& cfg) {
  if (actor != g.turn_taker) throw OutOfDomainError("actor does not hold the turn");
  if (actor == Agent::Follower && g.queue.empty())
    throw OutOfDomainError("follower cannot hold the turn with an empty queue");

  TransitionResult out{s, g, 0, {}, false};

  switch (a.kind) {
    case GameAction::Kind::Instruct: {
      if (actor != Agent::Leader) throw OutOfDomainError("only the leader can instruct");
      out.interaction.queue.push_back(a.text);  // Rule 1: no step cost
      out.rule = 1;
      return out;
    }
    case GameAction::Kind::Done: {
      if (actor == Agent::Leader) {
        if (!g.queue.empty()) {  // Rule 2: control to the follower
          out.interaction.turn_taker = Agent::Follower;
          out.interaction.steps_remaining = cfg.follower_steps;
          out.rule = 2;
        } else {  // Rule 3: follower turn skipped, fresh leader turn
          out.interaction.steps_remaining = cfg.leader_steps;
          out.rule = 3;
        }
        out.handover = true;
        return out;
      }
      // Follower DONE completes the head instruction.
      out.interaction.queue.pop_front();
      if (!out.interaction.queue.empty()) {  // Rule 5: same turn, no step cost
        out.rule = 5;
      } else {  // Rule 6: control back to the leader
        out.interaction.turn_taker = Agent::Leader;
        out.interaction.steps_remaining = cfg.leader_steps;
        out.rule = 6;
        out.handover = true;
      }
      return out;
    }
    case GameAction::Kind::World: {
      if (g.steps_remaining < 1)
        throw OutOfDomainError("world action with no steps remaining");
      WorldStepResult moved = apply_world_action(s, actor, a.move);
      out.move = moved.effect;
      if (moved.effect.rejected) return out;  // no step consumed, rule = 0
      out.world = std::move(moved.state);
      if (g.steps_remaining > 1) {  // Rule 8
        out.interaction.steps_remaining -= 1;
        out.rule = 8;
      } else if (actor == Agent::Leader) {  // Rule 4: keep control at zero steps
        out.interaction.steps_remaining = 0;
        out.rule = 4;
      } else {  // Rule 7: follower spent its last step
        out.interaction.turn_taker = Agent::Leader;
        out.interaction.steps_remaining = cfg.leader_steps;
        out.rule = 7;
        out.handover = true;
      }
      return out;
    }
    case GameAction::Kind::Timeout:
      throw OutOfDomainError("timeout is not a player action");
  }
  throw OutOfDomainError("unknown action kind");
}

namespace {

void apply_completion(GameState& g, std::vector<Effect>& effects, SpawnSource* spawns) {
  const Completion comp = check_completion(g.world);
  if (comp.kind != CompletionKind::ValidSet) return;

  Effect removed;
  removed.kind = Effect::Kind::SetComplete;
  removed.hexes = comp.hexes;
  for (const auto& hex : comp.hexes) removed.cards.push_back(g.world.cards.at(hex));
  effects.push_back(removed);

  RngSpawnSource default_spawns;
  SpawnSource& source = spawns ? *spawns : static_cast<SpawnSource&>(default_spawns);
  WorldState respawned = source.respawn(g.world, comp.hexes, g.rng, g.vocab);

  Effect spawn;
  spawn.kind = Effect::Kind::Spawn;
  for (const auto& [hex, card] : respawned.cards) {
    if (!g.world.cards.count(hex)) {
      spawn.hexes.push_back(hex);
      spawn.cards.push_back(card);
    }
  }
  g.world = std::move(respawned);
  effects.push_back(spawn);

  g.score += 1;
  g.sets_completed += 1;
  const int added = g.config.bonus(g.sets_completed);
  g.turns_remaining += added;
  Effect bonus;
  bonus.kind = Effect::Kind::Bonus;
  bonus.added = added;
  bonus.turns_remaining = g.turns_remaining;
  effects.push_back(bonus);
}

void apply_handover(GameState& g, std::vector<Effect>& effects) {
  g.turns_remaining -= 1;
  Effect turn;
  turn.kind = Effect::Kind::Turn;
  turn.taker = g.interaction.turn_taker;
  turn.steps = g.interaction.steps_remaining;
  turn.turns_remaining = g.turns_remaining;
  effects.push_back(turn);
  if (g.turns_remaining <= 0) {
    g.over = true;
    Effect over;
    over.kind = Effect::Kind::GameOver;
    effects.push_back(over);
  }
}

}  // namespace

std::vector<Effect> step(GameState& g, Agent actor, const GameAction& a,
                         SpawnSource* spawns) {
  if (g.over) throw GameOverError("game is over");

  TransitionResult t = transition(g.world, g.interaction, actor, a, g.config);
  std::vector<Effect> effects;

  if (a.kind == GameAction::Kind::World && t.move.rejected) {
    Effect reject;
    reject.kind = Effect::Kind::Reject;
    reject.reason = t.move.reject_reason;
    effects.push_back(reject);
  } else {
    g.world = std::move(t.world);
    g.interaction = std::move(t.interaction);
    if (t.move.toggled_card) {
      Effect toggle;
      toggle.kind = Effect::Kind::Toggle;
      toggle.hex = t.move.card_hex;
      toggle.selected = t.move.card_now_selected;
      effects.push_back(toggle);
      // Completion resolves before any handover accounting, so a set made on
      // the follower's last step still pays out its bonus turns.
      apply_completion(g, effects, spawns);
    }
    if (t.handover) apply_handover(g, effects);
  }

  Event ev;
  ev.index = static_cast<int>(g.log.size());
  ev.actor = actor;
  ev.action = a;
  ev.effects = effects;
  g.log.push_back(std::move(ev));
  return effects;
}

std::vector<Effect> force_turn_end(GameState& g) {
  if (g.over) throw GameOverError("game is over");
  const Agent actor = g.interaction.turn_taker;
  std::vector<Effect> effects;
  g.interaction.turn_taker = Agent::Leader;
  g.interaction.steps_remaining = g.config.leader_steps;
  apply_handover(g, effects);

  Event ev;
  ev.index = static_cast<int>(g.log.size());
  ev.actor = actor;
  ev.action = GameAction::timeout();
  ev.effects = effects;
  g.log.push_back(std::move(ev));
  return effects;
}

std::vector<GameAction> legal_actions(const GameState& g, const LegalActionOptions& opts) {
  std::vector<GameAction> out;
  if (g.over) return out;
  const Agent actor = g.interaction.turn_taker;
  if (actor == Agent::Follower && g.interaction.queue.empty()) return out;

  if (g.interaction.steps_remaining >= 1) {
    for (WorldAction wa : {WorldAction::MF, WorldAction::MB, WorldAction::RL, WorldAction::RR}) {
      if (!apply_world_action(g.world, actor, wa).effect.rejected)
        out.push_back(GameAction::world(wa));
    }
  }
  if (actor == Agent::Leader) {
    out.push_back(GameAction::instruct(""));
    if (!(opts.forbid_leader_done_on_empty_queue && g.interaction.queue.empty()))
      out.push_back(GameAction::done());
  } else {
    out.push_back(GameAction::done());
  }
  return out;
}

}  // namespace hexset
