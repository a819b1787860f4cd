#include "spex/graph6.hpp"

#include <cstdint>

namespace spex {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxShortOrder = 62;
constexpr int kMaxMediumOrder = 258047;

std::uint64_t bit_count(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

std::string g6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(kOffset + n));
  } else if (n <= kMaxMediumOrder) {
    out.push_back(126);
    out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kOffset + (n & 63)));
  } else {
    throw Graph6Error("graph6 encoder supports orders up to 258047");
  }

  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (group << (6 - filled))));
  return out;
}

Graph g6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    if (c < kOffset || c > 126) throw Graph6Error("graph6 byte outside the printable range 63..126");
  }

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - kOffset;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) throw Graph6Error("graph6 orders above 258047 unsupported");
    if (text.size() < 4) throw Graph6Error("truncated graph6 size header");
    n = ((text[1] - kOffset) << 12) | ((text[2] - kOffset) << 6) | (text[3] - kOffset);
    if (n <= kMaxShortOrder) throw Graph6Error("non-canonical graph6 size header");
    pos = 4;
  }

  const std::uint64_t bits = bit_count(static_cast<std::uint64_t>(n));
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups) {
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(groups) +
                      " data bytes, found " + std::to_string(text.size() - pos));
  }

  GraphBuilder b(n);
  std::uint64_t index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      const int value = text[pos + index / 6] - kOffset;
      if ((value >> (5 - index % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kOffset;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw Graph6Error("graph6 padding bits are not zero");
  }
  return std::move(b).build();
}

}  // namespace spex
