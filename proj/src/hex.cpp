#include "hexset/hex.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "hexset/errors.hpp"
#include "json.hpp"

namespace hexset {

std::ostream& operator<<(std::ostream& os, const HexCoord& c) {
  return os << "(" << c.q << "," << c.r << ")";
}

HexCoord neighbor(const HexCoord& c, const Heading& h) {
  const auto& d = kHexDirections[h.direction];
  return HexCoord{c.q + d.first, c.r + d.second};
}

int hex_distance(const HexCoord& a, const HexCoord& b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  const int ds = -dq - dr;
  return (std::abs(dq) + std::abs(dr) + std::abs(ds)) / 2;
}

const char* agent_name(Agent a) { return a == Agent::Leader ? "leader" : "follower"; }

std::optional<WorldAction> world_action_from_name(const std::string& name) {
  for (size_t i = 0; i < kWorldActionNames.size(); ++i) {
    if (name == kWorldActionNames[i]) return static_cast<WorldAction>(i);
  }
  return std::nullopt;
}

WorldState make_open_world(int width, int height) {
  WorldState s;
  s.width = width;
  s.height = height;
  s.terrain.assign(static_cast<size_t>(width) * height, 1);
  s.leader = AgentPose{HexCoord{0, 0}, Heading(0)};
  s.follower = AgentPose{HexCoord{width - 1, height - 1}, Heading(3)};
  return s;
}

WorldStepResult apply_world_action(const WorldState& s, Agent actor, WorldAction a) {
  WorldStepResult out{s, {}};
  AgentPose& pose = out.state.pose(actor);
  out.effect.from = pose.position;
  out.effect.to = pose.position;

  if (a == WorldAction::RL || a == WorldAction::RR) {
    pose.heading = (a == WorldAction::RL) ? pose.heading.left() : pose.heading.right();
    out.effect.rotated = true;
    return out;
  }

  const Heading dir = (a == WorldAction::MF) ? pose.heading : pose.heading.opposite();
  const HexCoord target = neighbor(pose.position, dir);

  auto reject = [&](const char* why) {
    WorldStepResult r{s, {}};
    r.effect.rejected = true;
    r.effect.reject_reason = why;
    r.effect.from = s.pose(actor).position;
    r.effect.to = target;
    return r;
  };

  if (!s.in_bounds(target)) return reject("off_map");
  if (!s.passable(target)) return reject("impassable");
  if (target == s.pose(other_agent(actor)).position) return reject("occupied");

  pose.position = target;
  out.effect.moved = true;
  out.effect.to = target;

  auto it = out.state.cards.find(target);
  if (it != out.state.cards.end()) {
    it->second.selected = !it->second.selected;
    out.effect.toggled_card = true;
    out.effect.card_hex = target;
    out.effect.card_now_selected = it->second.selected;
  }
  return out;
}

namespace {

std::vector<std::string> build_vocabulary(const Vocab& vocab) {
  std::vector<std::string> v;
  v.push_back("passable");
  for (const char* k : kPropKindNames) v.push_back(k);
  for (const auto& c : vocab.colors) v.push_back(c);
  for (const auto& sh : vocab.shapes) v.push_back(sh);
  v.push_back("count_1");
  v.push_back("count_2");
  v.push_back("count_3");
  v.push_back("card_selected");
  v.push_back("leader_here");
  v.push_back("follower_here");
  for (int h = 0; h < 6; ++h) v.push_back("leader_heading_" + std::to_string(h));
  for (int h = 0; h < 6; ++h) v.push_back("follower_heading_" + std::to_string(h));
  return v;
}

}  // namespace

StateTensor encode_state(const WorldState& s, const Vocab& vocab) {
  StateTensor t;
  t.width = s.width;
  t.height = s.height;
  t.vocabulary = build_vocabulary(vocab);
  t.planes.assign(t.vocabulary.size() * static_cast<size_t>(s.width) * s.height, 0);

  const size_t cells = static_cast<size_t>(s.width) * s.height;
  auto set = [&](size_t plane, const HexCoord& c) {
    t.planes[plane * cells + static_cast<size_t>(c.r) * s.width + c.q] = 1;
  };

  const size_t prop_base = 1;
  const size_t color_base = prop_base + kPropKindNames.size();
  const size_t shape_base = color_base + vocab.colors.size();
  const size_t count_base = shape_base + vocab.shapes.size();
  const size_t selected_plane = count_base + 3;
  const size_t leader_plane = selected_plane + 1;
  const size_t follower_plane = leader_plane + 1;
  const size_t leader_heading_base = follower_plane + 1;
  const size_t follower_heading_base = leader_heading_base + 6;

  for (int r = 0; r < s.height; ++r) {
    for (int q = 0; q < s.width; ++q) {
      HexCoord c{q, r};
      if (s.passable(c)) set(0, c);
    }
  }
  for (const auto& [c, p] : s.props) {
    set(prop_base + static_cast<size_t>(p.kind), c);
    if (p.color) set(color_base + *p.color, c);
  }
  for (const auto& [c, card] : s.cards) {
    set(color_base + card.color, c);
    set(shape_base + card.shape, c);
    set(count_base + (card.count - 1), c);
    if (card.selected) set(selected_plane, c);
  }
  set(leader_plane, s.leader.position);
  set(follower_plane, s.follower.position);
  set(leader_heading_base + s.leader.heading.direction, s.leader.position);
  set(follower_heading_base + s.follower.heading.direction, s.follower.position);
  return t;
}

void write_state_tensor(const StateTensor& t, std::ostream& os) {
  nlohmann::json header;
  header["version"] = 1;
  header["width"] = t.width;
  header["height"] = t.height;
  header["properties"] = t.property_count();
  header["vocabulary"] = t.vocabulary;
  os << header.dump() << "\n";
  os.write(reinterpret_cast<const char*>(t.planes.data()),
           static_cast<std::streamsize>(t.planes.size()));
}

StateTensor read_state_tensor(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing state tensor header", 1);
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded()) throw ParseError("bad state tensor header", 1);
  if (header.value("version", 0) != 1) throw VersionError("unsupported state tensor version");
  StateTensor t;
  t.width = header.at("width").get<int>();
  t.height = header.at("height").get<int>();
  t.vocabulary = header.at("vocabulary").get<std::vector<std::string>>();
  const size_t n = t.vocabulary.size() * static_cast<size_t>(t.width) * t.height;
  t.planes.resize(n);
  is.read(reinterpret_cast<char*>(t.planes.data()), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(is.gcount()) != n) throw ParseError("truncated state tensor", 2);
  return t;
}

}  // namespace hexset
