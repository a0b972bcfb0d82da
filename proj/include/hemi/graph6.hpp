#pragma once

// graph6 encoding: size header N(n) followed by the upper triangle of the
// adjacency matrix in column order, packed into 6-bit groups offset by 63.

#include "hemi/errors.hpp"
#include "hemi/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace hemi {

inline std::string graph6_encode(const Graph &g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
inline Graph graph6_decode(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.starts_with(header)) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);

  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= s.size()) throw MalformedGraph6("truncated graph6 string");
    const int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw MalformedGraph6("character out of graph6 range");
    return static_cast<std::uint64_t>(c - 63);
  };

  if (s.empty()) throw MalformedGraph6("empty graph6 string");
  std::uint64_t n = next();
  if (n == 63) {
    if (s.size() > 1 && s[1] == 126) {
      ++pos;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | next();
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | next();
    }
  }
  if (n > 100000) throw MalformedGraph6("graph6 vertex count too large");

  Graph g(static_cast<int>(n));
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != payload) throw MalformedGraph6("graph6 payload length mismatch");
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(s[pos + k / 6]);
      if (c < 63 || c > 126) throw MalformedGraph6("character out of graph6 range");
      if (((c - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

} // namespace hemi
