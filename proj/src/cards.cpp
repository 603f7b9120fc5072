#include "hexset/cards.hpp"

#include <algorithm>
#include <array>

#include "hexset/errors.hpp"
#include "hexset/hex.hpp"
#include "hexset/rng.hpp"

namespace hexset {

const Vocab& Vocab::defaults() {
  static const Vocab v{
      {"red", "blue", "green", "yellow", "orange", "pink"},
      {"heart", "star", "diamond", "square", "circle", "triangle"},
  };
  return v;
}

int Vocab::color_index(const std::string& name) const {
  auto it = std::find(colors.begin(), colors.end(), name);
  return it == colors.end() ? -1 : static_cast<int>(it - colors.begin());
}

int Vocab::shape_index(const std::string& name) const {
  auto it = std::find(shapes.begin(), shapes.end(), name);
  return it == shapes.end() ? -1 : static_cast<int>(it - shapes.begin());
}

std::string card_to_string(const Card& c, const Vocab& vocab) {
  return vocab.colors[c.color] + "|" + vocab.shapes[c.shape] + "|" +
         std::to_string(c.count) + "|" + (c.selected ? "true" : "false");
}

bool is_valid_set(const Card& a, const Card& b, const Card& c) {
  const bool colors = a.color != b.color && a.color != c.color && b.color != c.color;
  const bool shapes = a.shape != b.shape && a.shape != c.shape && b.shape != c.shape;
  const bool counts = a.count != b.count && a.count != c.count && b.count != c.count;
  return colors && shapes && counts;
}

namespace {

bool pair_clashes(const Card& a, const Card& b) {
  return a.color == b.color || a.shape == b.shape || a.count == b.count;
}

}  // namespace

Completion check_completion(const WorldState& s) {
  Completion out;
  std::vector<const Card*> selected;
  for (const auto& [hex, card] : s.cards) {
    if (card.selected) {
      out.hexes.push_back(hex);
      selected.push_back(&card);
    }
  }
  if (selected.empty()) {
    out.hexes.clear();
    return out;
  }
  for (size_t i = 0; i < selected.size(); ++i) {
    for (size_t j = i + 1; j < selected.size(); ++j) {
      if (pair_clashes(*selected[i], *selected[j])) {
        out.kind = CompletionKind::InvalidSelection;
        return out;
      }
    }
  }
  if (selected.size() == 3) {
    out.kind = CompletionKind::ValidSet;
    return out;
  }
  // 1-2 mutually compatible selections: still in progress.
  out.kind = CompletionKind::None;
  out.hexes.clear();
  return out;
}

bool exists_valid_set(const WorldState& s) {
  std::vector<const Card*> cards;
  cards.reserve(s.cards.size());
  for (const auto& [hex, card] : s.cards) cards.push_back(&card);
  const size_t n = cards.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (is_valid_set(*cards[i], *cards[j], *cards[k])) return true;
  return false;
}

WorldState respawn_cards(const WorldState& s, const std::vector<HexCoord>& removed,
                         Rng& rng, const Vocab& vocab) {
  WorldState base = s;
  for (const auto& hex : removed) base.cards.erase(hex);

  std::vector<HexCoord> free_hexes;
  for (int r = 0; r < base.height; ++r) {
    for (int q = 0; q < base.width; ++q) {
      HexCoord c{q, r};
      if (!base.passable(c)) continue;
      if (base.cards.count(c)) continue;
      if (c == base.leader.position || c == base.follower.position) continue;
      free_hexes.push_back(c);
    }
  }
  if (free_hexes.size() < 3) throw NoSpaceError("fewer than 3 legal hexes for respawn");

  const int kMaxResamples = 10000;
  const auto n_colors = static_cast<uint32_t>(vocab.colors.size());
  const auto n_shapes = static_cast<uint32_t>(vocab.shapes.size());

  std::array<HexCoord, 3> placed;
  auto sample_once = [&](WorldState& candidate) {
    candidate = base;
    // Three distinct positions via partial Fisher-Yates over a scratch copy.
    std::vector<HexCoord> pool = free_hexes;
    for (int i = 0; i < 3; ++i) {
      const uint32_t j = i + rng.below(static_cast<uint32_t>(pool.size() - i));
      std::swap(pool[i], pool[j]);
      placed[i] = pool[i];
      Card card;
      card.color = static_cast<uint8_t>(rng.below(n_colors));
      card.shape = static_cast<uint8_t>(rng.below(n_shapes));
      card.count = static_cast<uint8_t>(1 + rng.below(3));
      card.selected = false;
      candidate.cards[pool[i]] = card;
    }
  };

  WorldState candidate;
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    sample_once(candidate);
    if (exists_valid_set(candidate)) return candidate;
  }

  // Safety valve: keep the last sampled positions and force one compatible
  // triple so the spawn guarantee always holds.
  for (int i = 0; i < 3; ++i) {
    Card& card = candidate.cards[placed[i]];
    card.color = static_cast<uint8_t>(i % n_colors);
    card.shape = static_cast<uint8_t>(i % n_shapes);
    card.count = static_cast<uint8_t>(1 + (i % 3));
  }
  return candidate;
}

}  // namespace hexset
