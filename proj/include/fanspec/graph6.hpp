#pragma once

#include <string>
#include <string_view>

#include "fanspec/graph.hpp"

namespace fanspec {

/// graph6 encoding (no header, no trailing newline).
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and trailing
/// CR/LF are accepted. Throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);

}  // namespace fanspec
