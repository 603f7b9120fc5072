#include "hexset/policies.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hexset/errors.hpp"
#include "hexset/planner.hpp"
#include "hexset/rng.hpp"

namespace hexset {

namespace {

std::vector<std::string> words(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::optional<int> parse_count_word(const std::string& w) {
  if (w == "one" || w == "1") return 1;
  if (w == "two" || w == "2") return 2;
  if (w == "three" || w == "3") return 3;
  return std::nullopt;
}

std::optional<int> parse_small_number(const std::string& w) {
  if (auto c = parse_count_word(w)) return c;
  static const std::vector<std::string> names = {"four", "five", "six",
                                                 "seven", "eight", "nine", "ten"};
  for (size_t i = 0; i < names.size(); ++i)
    if (w == names[i]) return static_cast<int>(i) + 4;
  if (!w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(c); }))
    return std::stoi(w);
  return std::nullopt;
}

int shape_index_with_plural(const Vocab& vocab, const std::string& w) {
  int idx = vocab.shape_index(w);
  if (idx >= 0) return idx;
  if (w.size() > 1 && w.back() == 's') return vocab.shape_index(w.substr(0, w.size() - 1));
  return -1;
}

// Verb at tokens[i]; returns tokens consumed (0 = no verb) and select mode.
size_t match_verb(const std::vector<std::string>& t, size_t i, bool* select) {
  static const std::vector<std::string> select_verbs = {"get", "grab", "select", "take"};
  static const std::vector<std::string> deselect_verbs = {"deselect", "unselect", "avoid"};
  if (i + 1 < t.size() && t[i] == "pick" && t[i + 1] == "up") {
    *select = true;
    return 2;
  }
  for (const auto& v : select_verbs)
    if (t[i] == v) {
      *select = true;
      return 1;
    }
  for (const auto& v : deselect_verbs)
    if (t[i] == v) {
      *select = false;
      return 1;
    }
  return 0;
}

// "(the)? count? color? shape?" starting at i; at least one attribute.
std::optional<std::pair<CardFilter, size_t>> match_filter(const std::vector<std::string>& t,
                                                          size_t i, const Vocab& vocab) {
  CardFilter f;
  size_t j = i;
  if (j < t.size() && t[j] == "the") ++j;
  if (j < t.size()) {
    if (auto c = parse_count_word(t[j])) {
      f.count = *c;
      ++j;
    }
  }
  if (j < t.size()) {
    int color = vocab.color_index(t[j]);
    if (color >= 0) {
      f.color = static_cast<uint8_t>(color);
      ++j;
    }
  }
  if (j < t.size()) {
    int shape = shape_index_with_plural(vocab, t[j]);
    if (shape >= 0) {
      f.shape = static_cast<uint8_t>(shape);
      ++j;
    }
  }
  if (!f.count && !f.color && !f.shape) return std::nullopt;
  return std::make_pair(f, j);
}

std::optional<std::pair<Directive, size_t>> match_movement(const std::vector<std::string>& t,
                                                           size_t i) {
  Directive d;
  d.kind = Directive::Kind::Move;
  if (i + 1 < t.size() && t[i] == "turn") {
    if (t[i + 1] == "around") {
      d.pattern = Directive::MovePattern::TurnAround;
      return std::make_pair(d, i + 2);
    }
    if (t[i + 1] == "left") {
      d.pattern = Directive::MovePattern::TurnLeft;
      return std::make_pair(d, i + 2);
    }
    if (t[i + 1] == "right") {
      d.pattern = Directive::MovePattern::TurnRight;
      return std::make_pair(d, i + 2);
    }
  }
  if (i + 2 < t.size() && t[i] == "go" && t[i + 1] == "forward") {
    if (auto n = parse_small_number(t[i + 2])) {
      d.pattern = Directive::MovePattern::Forward;
      d.forward_steps = *n;
      return std::make_pair(d, i + 3);
    }
  }
  return std::nullopt;
}

}  // namespace

Directive parse_instruction(const std::string& text, const Vocab& vocab) {
  const std::vector<std::string> t = words(text);
  for (size_t i = 0; i < t.size(); ++i) {
    if (auto mv = match_movement(t, i)) return mv->first;

    bool select = true;
    const size_t consumed = match_verb(t, i, &select);
    if (consumed == 0) continue;

    Directive d;
    d.kind = Directive::Kind::CardTargets;
    d.select = select;
    size_t j = i + consumed;
    auto first = match_filter(t, j, vocab);
    if (!first) continue;  // verb without a card reference; keep scanning
    d.filters.push_back(first->first);
    j = first->second;

    // "and" chains more references; an unparseable conjunct ends the match
    // and the trailing text is ignored.
    while (j < t.size() && t[j] == "and") {
      size_t k = j + 1;
      bool chain_select = select;
      const size_t v = k < t.size() ? match_verb(t, k, &chain_select) : 0;
      if (v > 0 && chain_select == select) k += v;
      auto next = match_filter(t, k, vocab);
      if (!next) break;
      d.filters.push_back(next->first);
      j = next->second;
    }
    return d;
  }
  return Directive{};
}

// --- template follower -------------------------------------------------------

namespace {

class TemplateFollower final : public FollowerPolicy {
 public:
  void reset(const GameStartInfo&) override {
    active_ = false;
    move_plan_.clear();
    leg_.clear();
    targets_.clear();
  }

  GameAction decide(const Observation& obs) override {
    if (!active_) start_directive(obs);

    if (!move_plan_.empty()) {
      const WorldAction a = move_plan_.front();
      if (!apply_world_action(obs.world, Agent::Follower, a).effect.rejected) {
        move_plan_.pop_front();
        return GameAction::world(a);
      }
      move_plan_.clear();  // blocked movement macro: stop here
    }

    // Card tour: one leg at a time, replanned whenever the board changed
    // (the leader moved or toggled, a spawn landed on the route, or our own
    // leg just finished with a toggle).
    while (!targets_.empty()) {
      const bool stale = obs.world.cards != cards_snapshot_;
      const bool blocked =
          !leg_.empty() &&
          apply_world_action(obs.world, Agent::Follower, leg_.front()).effect.rejected;
      if (leg_.empty() || stale || blocked) {
        if (!plan_leg(obs)) break;
      }
      const WorldAction a = leg_.front();
      leg_.pop_front();
      if (leg_.empty()) targets_.erase(leg_target_);  // final action enters the card
      return GameAction::world(a);
    }

    active_ = false;
    move_plan_.clear();
    leg_.clear();
    targets_.clear();
    return GameAction::done();
  }

 private:
  void start_directive(const Observation& obs) {
    active_ = true;
    move_plan_.clear();
    leg_.clear();
    targets_.clear();
    if (obs.interaction.queue.empty()) return;
    const Directive d = parse_instruction(obs.interaction.queue.front(), obs.vocab);
    switch (d.kind) {
      case Directive::Kind::NoOp:
        return;
      case Directive::Kind::Move:
        switch (d.pattern) {
          case Directive::MovePattern::TurnLeft:
            move_plan_ = {WorldAction::RL};
            break;
          case Directive::MovePattern::TurnRight:
            move_plan_ = {WorldAction::RR};
            break;
          case Directive::MovePattern::TurnAround:
            move_plan_ = {WorldAction::RL, WorldAction::RL, WorldAction::RL};
            break;
          case Directive::MovePattern::Forward:
            move_plan_.assign(static_cast<size_t>(std::max(0, d.forward_steps)),
                              WorldAction::MF);
            break;
        }
        return;
      case Directive::Kind::CardTargets:
        select_ = d.select;
        for (const CardFilter& f : d.filters) {
          auto target = resolve(obs, f, d.select);
          if (!target) {
            targets_.clear();
            return;  // an unmatched reference aborts the whole directive
          }
          targets_.insert(*target);
        }
        return;
    }
  }

  bool plan_leg(const Observation& obs) {
    // Drop targets whose card vanished or is already in the requested state.
    for (auto it = targets_.begin(); it != targets_.end();) {
      auto card = obs.world.cards.find(*it);
      if (card == obs.world.cards.end() || card->second.selected == select_)
        it = targets_.erase(it);
      else
        ++it;
    }
    leg_.clear();
    std::optional<HexCoord> best;
    std::optional<std::vector<WorldAction>> best_path;
    for (const HexCoord& target : targets_) {
      auto path = leg_path(obs, target);
      if (!path) continue;
      if (!best_path || path->size() < best_path->size() ||
          (path->size() == best_path->size() && target < *best)) {
        best = target;
        best_path = std::move(path);
      }
    }
    if (!best_path) {
      targets_.clear();
      return false;
    }
    leg_target_ = *best;
    leg_.assign(best_path->begin(), best_path->end());
    cards_snapshot_ = obs.world.cards;
    return !leg_.empty();
  }

  std::optional<std::vector<WorldAction>> leg_path(const Observation& obs,
                                                   const HexCoord& target) const {
    PathQuery q;
    q.world = &obs.world;
    q.actor = Agent::Follower;
    q.start = obs.world.follower;
    q.goal = PathGoal::card(target);
    q.terminal = {target};
    for (const auto& [other, unused] : obs.world.cards)
      if (other != target) q.forbidden.insert(other);
    return shortest_path(q);
  }

  // Nearest on-board card matching the filter whose selection state would
  // change in the requested direction; pose-graph cost, ties by hex order.
  std::optional<HexCoord> resolve(const Observation& obs, const CardFilter& f,
                                  bool select) const {
    std::optional<HexCoord> best;
    std::optional<int> best_cost;
    for (const auto& [hex, card] : obs.world.cards) {
      if (!f.matches(card)) continue;
      if (card.selected == select) continue;
      auto path = leg_path(obs, hex);
      if (!path) continue;
      const int cost = static_cast<int>(path->size());
      if (!best_cost || cost < *best_cost) {
        best = hex;
        best_cost = cost;
      }
    }
    return best;
  }

  bool active_ = false;
  bool select_ = true;
  std::deque<WorldAction> move_plan_;
  std::set<HexCoord> targets_;
  std::deque<WorldAction> leg_;
  HexCoord leg_target_;
  std::map<HexCoord, Card> cards_snapshot_;
};

class RandomPolicy final : public FollowerPolicy {
 public:
  explicit RandomPolicy(uint64_t seed) : seed_(seed), rng_(seed) {}

  void reset(const GameStartInfo& info) override {
    rng_ = Rng(info.seed ^ seed_);
  }

  GameAction decide(const Observation& obs) override {
    if (obs.interaction.steps_remaining <= 1) return GameAction::done();
    std::vector<GameAction> candidates;
    for (WorldAction wa : {WorldAction::MF, WorldAction::MB, WorldAction::RL, WorldAction::RR}) {
      if (!apply_world_action(obs.world, Agent::Follower, wa).effect.rejected)
        candidates.push_back(GameAction::world(wa));
    }
    candidates.push_back(GameAction::done());
    return candidates[rng_.below(static_cast<uint32_t>(candidates.size()))];
  }

 private:
  uint64_t seed_;
  Rng rng_;
};

class StaticOracle final : public FollowerPolicy {
 public:
  explicit StaticOracle(std::vector<GameAction> actions) : actions_(std::move(actions)) {}

  GameAction decide(const Observation& obs) override {
    if (cursor_ >= actions_.size())
      throw DesyncError("static oracle ran out of recorded actions");
    const GameAction& a = actions_[cursor_];
    if (a.kind == GameAction::Kind::World &&
        apply_world_action(obs.world, Agent::Follower, a.move).effect.rejected)
      throw DesyncError("recorded action became illegal during replay");
    ++cursor_;
    return a;
  }

 private:
  std::vector<GameAction> actions_;
  size_t cursor_ = 0;
};

}  // namespace

std::unique_ptr<FollowerPolicy> make_template_follower() {
  return std::make_unique<TemplateFollower>();
}

std::unique_ptr<FollowerPolicy> make_random_policy(uint64_t seed) {
  return std::make_unique<RandomPolicy>(seed);
}

std::unique_ptr<FollowerPolicy> make_static_oracle(std::vector<GameAction> follower_actions) {
  return std::make_unique<StaticOracle>(std::move(follower_actions));
}

std::unique_ptr<FollowerPolicy> make_policy_by_name(const std::string& name, uint64_t seed) {
  if (name == "template") return make_template_follower();
  if (name == "random") return make_random_policy(seed);
  throw ConfigError("unknown policy: " + name);
}

std::vector<std::string> policy_names() { return {"template", "random"}; }

}  // namespace hexset
