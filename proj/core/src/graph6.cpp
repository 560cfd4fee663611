#include "sqenergy/graph6.hpp"

#include "sqenergy/errors.hpp"

namespace sqe {

namespace {

constexpr int kOffset = 63;

int value_at(std::string_view s, std::size_t pos, std::size_t base) {
  if (pos >= s.size()) throw ParseError("graph6: truncated input", base + pos);
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + pos);
  return c - kOffset;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') {
      throw ParseError("graph6: orders above " + std::to_string(kGraph6MaxOrder) + " are not supported",
                       base + 1);
    }
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(value_at(text, i, base));
    if (n < 63) throw ParseError("graph6: non-canonical long header", base + 1);
    pos = 4;
  } else {
    n = static_cast<std::size_t>(value_at(text, 0, base));
    pos = 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() < pos + need) {
    throw ParseError("graph6: truncated bit vector, expected " + std::to_string(need) + " data bytes",
                     base + text.size());
  }
  if (text.size() > pos + need) throw ParseError("graph6: trailing bytes", base + pos + need);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = value_at(text, pos + k / 6, base);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = value_at(text, pos + need - 1, base);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6: non-zero padding bits", base + pos + need - 1);
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw DomainError("graph6: order too large to encode");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

void read_graph6_stream(std::istream& in, const std::function<void(Graph&&, std::size_t)>& sink) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = from_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), e.offset(), line_no);
    }
    sink(std::move(g), line_no);
  }
}

}  // namespace sqe
