#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace dynanet {

using NodeId = std::uint32_t;
using Round = std::int32_t;
using Color = std::uint32_t;  // colors are 1-based; 0 encodes "no color yet"

inline constexpr Color kNoColor = 0;
inline constexpr Round kNoRound = -1;

enum class MisState : std::uint8_t { undecided = 0, dominated = 1, mis = 2 };

// Undirected edge, stored canonically with a < b. Self-loops are invalid.
struct Edge {
  NodeId a = 0;
  NodeId b = 0;

  Edge() = default;
  Edge(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw std::invalid_argument("Edge: self-loop");
  }

  std::uint64_t key() const { return (std::uint64_t(a) << 32) | b; }
  static Edge from_key(std::uint64_t k) {
    return Edge(static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xffffffffu));
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// End-of-round output of one node. `bot` covers both "uncolored" and
// "undecided"; a run produces either color or MIS outputs, never both.
struct OutputValue {
  enum class Kind : std::uint8_t { bot = 0, color = 1, mis = 2, dominated = 3 };

  Kind kind = Kind::bot;
  Color color = kNoColor;

  static OutputValue bot() { return {}; }
  static OutputValue of_color(Color c) {
    if (c == kNoColor) return {};
    return {Kind::color, c};
  }
  static OutputValue of_mis(MisState s) {
    switch (s) {
      case MisState::mis: return {Kind::mis, 0};
      case MisState::dominated: return {Kind::dominated, 0};
      default: return {};
    }
  }

  bool is_bot() const { return kind == Kind::bot; }
  MisState mis_state() const {
    if (kind == Kind::mis) return MisState::mis;
    if (kind == Kind::dominated) return MisState::dominated;
    return MisState::undecided;
  }

  friend bool operator==(const OutputValue&, const OutputValue&) = default;
};

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dynanet
