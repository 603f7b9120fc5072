#pragma once

#include <cstdint>

#include "hexset/cards.hpp"
#include "hexset/hex.hpp"

namespace hexset {

struct MapConfig {
  int width = 25;
  int height = 25;
  double obstacle_density = 0.12;  // fraction of hexes bearing props
  int initial_cards = 21;
  uint64_t seed = 0;

  void validate() const;

  friend bool operator==(const MapConfig& a, const MapConfig& b) {
    return a.width == b.width && a.height == b.height &&
           a.obstacle_density == b.obstacle_density && a.initial_cards == b.initial_cards &&
           a.seed == b.seed;
  }
};

// Generates a playable world: props at the requested density with a single
// connected passable region, two agents on distinct hexes, and initial cards
// placed so the board contains at least one valid set. Deterministic per
// seed. Throws GenerationFailedError when the config is overconstrained.
WorldState generate_map(const MapConfig& cfg, const Vocab& vocab = Vocab::defaults());

}  // namespace hexset
