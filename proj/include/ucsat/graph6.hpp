#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ucsat/graph.hpp"

namespace ucsat {

/// graph6 codec, short form only: header byte 63+n, then the upper-triangle
/// adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per byte,
/// most significant bit first, each byte offset by 63. Padding bits are zero.
class Graph6Error : public std::runtime_error {
 public:
  enum class Kind {
    kBadHeader,         // empty input, n = 0, or long-form marker '~'
    kBadCharacter,      // payload byte outside 63..126
    kTruncated,         // fewer payload bytes than the bit stream needs
    kNonzeroPadding,    // trailing pad bits not all zero
    kTrailingData,      // payload bytes past the bit stream
    kUnsupportedOrder,  // encode side: n > 62
  };

  Graph6Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Graph decode_graph6(std::string_view text) {
  using Kind = Graph6Error::Kind;
  if (text.empty())
    throw Graph6Error(Kind::kBadHeader, "graph6: empty input");
  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    throw Graph6Error(Kind::kBadHeader,
                      "graph6: long-form header not supported (n > 62)");
  if (header < 63 || header > 125)
    throw Graph6Error(Kind::kBadHeader, "graph6: malformed length byte");
  int n = header - 63;
  if (n == 0)
    throw Graph6Error(Kind::kBadHeader,
                      "graph6: zero-vertex graph not representable here");
  Graph g(n);
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) - 1 < nbytes)
    throw Graph6Error(Kind::kTruncated, "graph6: truncated bit payload");
  if (static_cast<int>(text.size()) - 1 > nbytes)
    throw Graph6Error(Kind::kTrailingData, "graph6: trailing data after payload");
  int bit = 0;
  for (int i = 0; i < nbytes; ++i) {
    unsigned char c = static_cast<unsigned char>(text[1 + i]);
    if (c < 63 || c > 126)
      throw Graph6Error(Kind::kBadCharacter,
                        "graph6: payload character outside 63..126");
    int group = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      int b = (group >> k) & 1;
      if (bit >= nbits) {
        if (b)
          throw Graph6Error(Kind::kNonzeroPadding, "graph6: nonzero padding");
        continue;
      }
      if (b) {
        // bit index -> column-major upper-triangle position (u, v), u < v
        int v = 1;
        int rem = bit;
        while (rem >= v) rem -= v, ++v;
        g.add_edge(rem, v);
      }
    }
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62)
    throw Graph6Error(Graph6Error::Kind::kUnsupportedOrder,
                      "graph6: short form encodes at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace ucsat
