#include "hexset/mapgen.hpp"

#include <algorithm>
#include <vector>

#include "hexset/errors.hpp"
#include "hexset/rng.hpp"

namespace hexset {

void MapConfig::validate() const {
  if (width < 2 || height < 2) throw ConfigError("map must be at least 2x2");
  if (obstacle_density < 0.0 || obstacle_density >= 1.0)
    throw ConfigError("obstacle_density must be in [0,1)");
  if (initial_cards < 3) throw ConfigError("initial_cards must be >= 3");
}

namespace {

bool passable_connected(const WorldState& s) {
  std::vector<HexCoord> open;
  for (int r = 0; r < s.height; ++r)
    for (int q = 0; q < s.width; ++q)
      if (s.passable(HexCoord{q, r})) open.push_back(HexCoord{q, r});
  if (open.empty()) return false;

  std::vector<uint8_t> seen(static_cast<size_t>(s.width) * s.height, 0);
  std::vector<HexCoord> stack{open.front()};
  seen[static_cast<size_t>(open.front().r) * s.width + open.front().q] = 1;
  size_t reached = 0;
  while (!stack.empty()) {
    HexCoord c = stack.back();
    stack.pop_back();
    ++reached;
    for (int h = 0; h < 6; ++h) {
      HexCoord n = neighbor(c, Heading(h));
      if (!s.passable(n)) continue;
      uint8_t& flag = seen[static_cast<size_t>(n.r) * s.width + n.q];
      if (!flag) {
        flag = 1;
        stack.push_back(n);
      }
    }
  }
  return reached == open.size();
}

}  // namespace

WorldState generate_map(const MapConfig& cfg, const Vocab& vocab) {
  cfg.validate();
  Rng rng(cfg.seed);
  const int cells = cfg.width * cfg.height;
  const int prop_count = static_cast<int>(cfg.obstacle_density * cells + 0.5);
  const auto n_colors = static_cast<uint32_t>(vocab.colors.size());
  const auto n_shapes = static_cast<uint32_t>(vocab.shapes.size());

  const int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    WorldState s = make_open_world(cfg.width, cfg.height);

    std::vector<HexCoord> all;
    all.reserve(cells);
    for (int r = 0; r < cfg.height; ++r)
      for (int q = 0; q < cfg.width; ++q) all.push_back(HexCoord{q, r});

    for (int i = 0; i < prop_count; ++i) {
      const uint32_t j = i + rng.below(static_cast<uint32_t>(all.size() - i));
      std::swap(all[i], all[j]);
      Prop p;
      p.kind = static_cast<PropKind>(rng.below(static_cast<uint32_t>(kPropKindNames.size())));
      p.color = static_cast<uint8_t>(rng.below(n_colors));
      s.props[all[i]] = p;
    }
    if (!passable_connected(s)) continue;

    std::vector<HexCoord> open;
    for (int r = 0; r < cfg.height; ++r)
      for (int q = 0; q < cfg.width; ++q)
        if (s.passable(HexCoord{q, r})) open.push_back(HexCoord{q, r});
    if (static_cast<int>(open.size()) < cfg.initial_cards + 2) continue;

    // Agents, then cards, all on distinct hexes.
    for (int i = 0; i < cfg.initial_cards + 2; ++i) {
      const uint32_t j = i + rng.below(static_cast<uint32_t>(open.size() - i));
      std::swap(open[i], open[j]);
    }
    s.leader = AgentPose{open[0], Heading(static_cast<int>(rng.below(6)))};
    s.follower = AgentPose{open[1], Heading(static_cast<int>(rng.below(6)))};

    bool card_ok = false;
    for (int retry = 0; retry < 200 && !card_ok; ++retry) {
      s.cards.clear();
      for (int i = 0; i < cfg.initial_cards; ++i) {
        Card card;
        card.color = static_cast<uint8_t>(rng.below(n_colors));
        card.shape = static_cast<uint8_t>(rng.below(n_shapes));
        card.count = static_cast<uint8_t>(1 + rng.below(3));
        s.cards[open[2 + i]] = card;
      }
      card_ok = exists_valid_set(s);
    }
    if (!card_ok) continue;
    return s;
  }
  throw GenerationFailedError("could not generate a playable map for this config");
}

}  // namespace hexset
