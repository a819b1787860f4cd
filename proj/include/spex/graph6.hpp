#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spex/graph.hpp"

namespace spex {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// graph6 text for g (orders up to 258047), without a trailing newline.
std::string g6_encode(const Graph& g);

/// Parses one graph6 line. An optional ">>graph6<<" prefix and trailing
/// line terminators are accepted; anything else malformed throws Graph6Error.
Graph g6_decode(std::string_view text);

}  // namespace spex
