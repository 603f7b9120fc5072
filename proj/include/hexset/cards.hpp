#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hexset {

struct HexCoord;
struct WorldState;
class Rng;

// Attribute vocabularies for cards and prop colors. Configurable; the
// defaults are what every tool and test uses unless a config overrides them.
struct Vocab {
  std::vector<std::string> colors;
  std::vector<std::string> shapes;

  static const Vocab& defaults();

  int color_index(const std::string& name) const;  // -1 if unknown
  int shape_index(const std::string& name) const;

  friend bool operator==(const Vocab& a, const Vocab& b) {
    return a.colors == b.colors && a.shapes == b.shapes;
  }
};

struct Card {
  uint8_t color = 0;  // index into Vocab::colors
  uint8_t shape = 0;  // index into Vocab::shapes
  uint8_t count = 1;  // 1..3
  bool selected = false;

  friend bool operator==(const Card& a, const Card& b) {
    return a.color == b.color && a.shape == b.shape && a.count == b.count &&
           a.selected == b.selected;
  }
  friend bool operator!=(const Card& a, const Card& b) { return !(a == b); }
};

// "color|shape|count|selected", e.g. "red|heart|1|true".
std::string card_to_string(const Card& c, const Vocab& vocab = Vocab::defaults());

bool is_valid_set(const Card& a, const Card& b, const Card& c);

enum class CompletionKind : uint8_t { None = 0, ValidSet, InvalidSelection };

struct Completion {
  CompletionKind kind = CompletionKind::None;
  std::vector<HexCoord> hexes;  // the selected card hexes, when not None
};

// ValidSet iff exactly three selected cards with pairwise-distinct color,
// shape and count; InvalidSelection iff the selected cards can never all be
// part of one valid set (a pairwise attribute clash, which also covers >3
// selected with counts in 1..3).
Completion check_completion(const WorldState& s);

bool exists_valid_set(const WorldState& s);

// Deletes the completed set and places three fresh unselected cards on
// uniformly sampled empty passable prop-free hexes, resampling positions and
// attributes until the board again contains a valid set. Throws NoSpaceError
// when fewer than three legal hexes exist.
WorldState respawn_cards(const WorldState& s, const std::vector<HexCoord>& removed,
                         Rng& rng, const Vocab& vocab = Vocab::defaults());

}  // namespace hexset
