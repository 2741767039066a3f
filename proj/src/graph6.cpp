#include "fanspec/graph6.hpp"

#include "fanspec/errors.hpp"

namespace fanspec {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 record", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", base + i);
  }

  long n = 0;
  std::size_t pos = 0;
  auto take6 = [&](int count) {
    long v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= text.size()) throw ParseError("truncated size field", base + pos);
      v = (v << 6) | (static_cast<unsigned char>(text[pos++]) - 63);
    }
    return v;
  };
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take6(3);
  } else {
    pos = 2;
    n = take6(6);
  }
  if (n > kMaxOrder) throw ParseError("graph order " + std::to_string(n) + " exceeds limit", base);

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != expected) {
    std::size_t where = text.size() - pos < expected ? text.size() : pos + expected;
    throw ParseError("expected " + std::to_string(expected) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                     base + where);
  }

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      auto byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(k / 6)]) - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  return b.build();
}

}  // namespace fanspec
