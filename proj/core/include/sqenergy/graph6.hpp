#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "sqenergy/graph.hpp"

namespace sqe {

// Largest order representable with the 4-byte graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decode one graph6 line. A trailing '\n' / '\r' is ignored, as is an
/// optional ">>graph6<<" prefix. Throws ParseError naming the byte offset.
Graph from_graph6(std::string_view text);

/// Encode without header or trailing newline.
std::string to_graph6(const Graph& g);

/// Streams graphs from `in`, one graph6 line at a time; blank lines are
/// skipped. Parse failures are rethrown as ParseError whose message carries
/// the 1-based line number.
void read_graph6_stream(std::istream& in,
                        const std::function<void(Graph&&, std::size_t line)>& sink);

}  // namespace sqe
