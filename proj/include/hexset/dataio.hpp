#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hexset/engine.hpp"
#include "hexset/mapgen.hpp"
#include "json.hpp"

namespace hexset {

// A full serialized game: configuration, initial world, append-only event
// log and final score. JSONL, one interaction per line (docs/formats.md).
struct RecordedInteraction {
  int version = 1;
  std::string id;
  uint64_t seed = 0;
  TurnConfig turn_config;
  MapConfig map_config;
  Vocab vocab = Vocab::defaults();
  WorldState initial;
  std::vector<Event> events;
  int final_score = 0;
};

struct ExampleTuple {
  Agent actor = Agent::Follower;
  GameAction action;

  friend bool operator==(const ExampleTuple& a, const ExampleTuple& b) {
    return a.actor == b.actor && a.action == b.action;
  }
};

struct RecoveryProvenance {
  int source_instruction = 0;  // the j whose pose error this example repairs
  AgentPose perturbed_start;
};

// One instruction paired with the tuple subsequence from the follower's
// first action on it through the DONE completing it, leader actions
// interleaved and actor-tagged.
struct InstructionExample {
  int version = 1;
  std::string interaction_id;
  int instruction_index = 0;  // 1-based completion order
  std::string text;
  WorldState start_world;
  InteractionState start_interaction;
  int start_score = 0;
  int start_sets_completed = 0;
  int start_turns_remaining = 0;
  std::vector<ExampleTuple> tuples;
  std::vector<TapedSpawn> spawn_tape;  // spawns occurring within the tuples
  TurnConfig turn_config;
  Vocab vocab = Vocab::defaults();
  bool implicit = false;
  std::optional<RecoveryProvenance> provenance;

  // Indices into the parent record's replay tuples; -1 for synthesized
  // (recovery) examples.
  long record_first_tuple = -1;
  long record_done_tuple = -1;

  std::vector<GameAction> follower_actions() const;
};

// --- JSON conversion ---------------------------------------------------------

nlohmann::json world_to_json(const WorldState& s, const Vocab& vocab);
WorldState world_from_json(const nlohmann::json& j, const Vocab& vocab);
nlohmann::json action_to_json(const GameAction& a);
GameAction action_from_json(const nlohmann::json& j);
nlohmann::json event_to_json(const Event& e, const Vocab& vocab);
Event event_from_json(const nlohmann::json& j, const Vocab& vocab);
nlohmann::json interaction_to_json(const RecordedInteraction& r);
RecordedInteraction interaction_from_json(const nlohmann::json& j);
nlohmann::json example_to_json(const InstructionExample& e);
InstructionExample example_from_json(const nlohmann::json& j);
nlohmann::json turn_config_to_json(const TurnConfig& c);
TurnConfig turn_config_from_json(const nlohmann::json& j);
nlohmann::json map_config_to_json(const MapConfig& c);
MapConfig map_config_from_json(const nlohmann::json& j);

// --- persistence -------------------------------------------------------------

void save_interactions(std::ostream& os, const std::vector<RecordedInteraction>& recs);
void save_interactions(const std::string& path, const std::vector<RecordedInteraction>& recs);
std::vector<RecordedInteraction> load_interactions(std::istream& is);
std::vector<RecordedInteraction> load_interactions(const std::string& path);

void save_examples(const std::string& path, const std::vector<InstructionExample>& examples);
std::vector<InstructionExample> load_examples(const std::string& path);

// --- replay ------------------------------------------------------------------

// The game state immediately before an event was applied.
struct ReplayTuple {
  WorldState world;
  InteractionState interaction;
  int score = 0;
  int sets_completed = 0;
  int turns_remaining = 0;
  Agent actor = Agent::Follower;
  GameAction action;
  bool toggled_card = false;
  HexCoord toggle_hex;
};

struct InstructionSegment {
  int index = 0;  // 1-based
  std::string text;
  size_t first_tuple = 0;  // first follower action on this instruction
  size_t done_tuple = 0;   // the follower DONE completing it
};

// A maximal run of leader actions ending in the leader's DONE (or timeout).
struct LeaderTurn {
  size_t first_tuple = 0;
  size_t last_tuple = 0;  // inclusive
};

struct ReplayResult {
  std::vector<ReplayTuple> tuples;
  std::vector<InstructionSegment> instructions;  // completed instructions only
  std::vector<LeaderTurn> leader_turns;
  std::vector<TapedSpawn> spawn_tape;
  // Global tuple index of each spawn-tape entry's triggering event.
  std::vector<size_t> spawn_tuple_index;
  GameState final_state;
  int issued_instructions = 0;
  std::vector<std::string> flags;  // empty for a clean record
};

enum class ReplaySpawns { FromLog, FromRng };

// Recomputes every state from the event log. FromLog injects the recorded
// spawns (works for any well-formed record); FromRng redraws them from the
// recorded seed and flags divergence, which checks bit-exact reproducibility
// of engine-generated games.
ReplayResult replay(const RecordedInteraction& rec,
                    ReplaySpawns mode = ReplaySpawns::FromLog);

struct ValidationReport {
  struct GameReport {
    std::string id;
    bool ok = true;
    std::vector<std::string> flags;
  };
  std::vector<GameReport> games;
  bool all_ok() const;
};

ValidationReport replay_validate(const std::vector<RecordedInteraction>& corpus);

// --- instruction examples ------------------------------------------------------

std::vector<InstructionExample> extract_examples(const RecordedInteraction& rec);
std::vector<InstructionExample> extract_examples(const RecordedInteraction& rec,
                                                 const ReplayResult& rep);

// Relaxed example simulation: applies the tuple actions to the start world
// (checking world-action legality and queue discipline, injecting taped
// spawns on completions) without enforcing per-turn step budgets, which a
// synthesized catch-up turn may exceed.
struct ExampleSim {
  bool legal = true;
  std::string first_violation;
  WorldState final_world;
  AgentPose follower_end;             // pose at the completing DONE
  std::vector<bool> tuple_toggled;    // per tuple: did it toggle a card
  std::vector<HexCoord> toggle_hexes; // parallel to tuple_toggled
  std::vector<AgentPose> follower_pose_before;  // per tuple
};

ExampleSim simulate_example(const InstructionExample& ex);

// --- corpus statistics ---------------------------------------------------------

// Lowercases, then emits alphanumeric runs as tokens and every other
// non-space character as a single-character token.
std::vector<std::string> tokenize_for_stats(const std::string& text);

struct StatRow {
  std::string name;
  double mean = 0.0;
  double median = 0.0;
  double max = 0.0;
};

struct DatasetStats {
  std::vector<StatRow> rows;
  long interactions = 0;
  long vocabulary_size = 0;

  std::string to_tsv() const;
  nlohmann::json to_json() const;
};

DatasetStats dataset_stats(const std::vector<RecordedInteraction>& corpus);

}  // namespace hexset
