#pragma once

// Byte-aligned LZSS codec filling the mid point between lz4 and deflate:
// hash-chain match search with lazy evaluation buys a better ratio than the
// single-probe lz4 parse, while the flag-bit decode stays well under the
// cost of a Huffman-coded inflate.
//
// Stream layout: groups of 8 items prefixed by a control byte (LSB first,
// bit set = match). A literal is one raw byte. A match is a little-endian
// word holding offset-1 in the low 12 bits and a length code in the high 4
// bits (length = 3 + code, code 15 extends with 255-stepped bytes).

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <span>
#include <utility>
#include <vector>

#include "tiersim/error.hpp"
#include "tiersim/types.hpp"

namespace tiersim::lzss {

inline constexpr std::size_t kWindow = 4096;
inline constexpr std::size_t kMinMatch = 3;
inline constexpr std::size_t kMaxLenCode = 15;

inline Bytes compress(std::span<const std::uint8_t> src, int level = 6) {
  const std::size_t n = src.size();
  const std::uint8_t* p = src.data();
  const int depth = 8 * std::clamp(level, 1, 9);

  Bytes out;
  out.reserve(n + n / 8 + 8);

  constexpr std::size_t kHashSize = 1u << 12;
  std::vector<std::int32_t> head(kHashSize, -1);
  std::vector<std::int32_t> prev(n, -1);

  auto hash3 = [&](std::size_t i) {
    const std::uint32_t v = p[i] | (p[i + 1] << 8) | (p[i + 2] << 16);
    return (v * 2654435761u) >> 20;
  };

  std::size_t ctrl_pos = 0;
  int ctrl_bits = 0;
  auto begin_item = [&](bool is_match) {
    if (ctrl_bits == 0) {
      ctrl_pos = out.size();
      out.push_back(0);
    }
    if (is_match) out[ctrl_pos] |= static_cast<std::uint8_t>(1u << ctrl_bits);
    ctrl_bits = (ctrl_bits + 1) & 7;
  };

  std::size_t inserted = 0;
  auto insert_up_to = [&](std::size_t limit) {
    for (; inserted < limit; ++inserted) {
      if (inserted + kMinMatch > n) continue;
      const auto h = hash3(inserted);
      prev[inserted] = head[h];
      head[h] = static_cast<std::int32_t>(inserted);
    }
  };

  // (length, distance); (0, 0) when nothing of kMinMatch or more is found.
  auto find_match = [&](std::size_t pos) -> std::pair<std::size_t, std::size_t> {
    if (pos + kMinMatch > n) return {0, 0};
    const std::size_t max_len = n - pos;
    std::size_t best_len = 0;
    std::size_t best_dist = 0;
    std::int32_t cand = head[hash3(pos)];
    int left = depth;
    while (cand >= 0 && left-- > 0) {
      const std::size_t dist = pos - static_cast<std::size_t>(cand);
      if (dist > kWindow) break;  // chain entries only get older
      const std::size_t c = static_cast<std::size_t>(cand);
      if (best_len < max_len && p[c + best_len] == p[pos + best_len]) {
        std::size_t l = 0;
        while (l < max_len && p[c + l] == p[pos + l]) ++l;
        if (l > best_len) {
          best_len = l;
          best_dist = dist;
          if (best_len == max_len) break;
        }
      }
      cand = prev[c];
    }
    if (best_len < kMinMatch) return {0, 0};
    return {best_len, best_dist};
  };

  auto emit_match = [&](std::size_t len, std::size_t dist) {
    begin_item(true);
    const std::size_t code = std::min(len - kMinMatch, kMaxLenCode);
    const std::uint16_t word =
        static_cast<std::uint16_t>((code << 12) | (dist - 1));
    out.push_back(static_cast<std::uint8_t>(word & 0xff));
    out.push_back(static_cast<std::uint8_t>(word >> 8));
    if (code == kMaxLenCode) {
      std::size_t v = len - kMinMatch - kMaxLenCode;
      while (v >= 255) {
        out.push_back(255);
        v -= 255;
      }
      out.push_back(static_cast<std::uint8_t>(v));
    }
  };

  std::size_t pos = 0;
  while (pos < n) {
    insert_up_to(pos);
    auto [len, dist] = find_match(pos);
    if (len == 0) {
      begin_item(false);
      out.push_back(p[pos]);
      ++pos;
      continue;
    }
    if (pos + 1 < n) {  // lazy step: prefer a longer match one byte later
      insert_up_to(pos + 1);
      auto [len2, dist2] = find_match(pos + 1);
      if (len2 > len) {
        begin_item(false);
        out.push_back(p[pos]);
        ++pos;
        len = len2;
        dist = dist2;
      }
    }
    emit_match(len, dist);
    pos += len;
  }
  return out;
}

inline void decompress(std::span<const std::uint8_t> src,
                       std::span<std::uint8_t> dst) {
  const std::uint8_t* in = src.data();
  const std::size_t in_len = src.size();
  std::uint8_t* out = dst.data();
  const std::size_t cap = dst.size();
  std::size_t i = 0;
  std::size_t o = 0;
  std::uint32_t ctrl = 0;
  int bits = 0;
  while (o < cap) {
    if (bits == 0) {
      if (i >= in_len) throw Error("lzss: truncated stream");
      ctrl = in[i++];
      bits = 8;
    }
    const bool is_match = ctrl & 1;
    ctrl >>= 1;
    --bits;
    if (!is_match) {
      if (i >= in_len) throw Error("lzss: truncated literal");
      out[o++] = in[i++];
      continue;
    }
    if (i + 2 > in_len) throw Error("lzss: truncated match word");
    const std::uint16_t w =
        static_cast<std::uint16_t>(in[i] | (in[i + 1] << 8));
    i += 2;
    const std::size_t dist = (w & 0x0fff) + 1;
    std::size_t len = (w >> 12) + kMinMatch;
    if ((w >> 12) == kMaxLenCode) {
      std::uint8_t b;
      do {
        if (i >= in_len) throw Error("lzss: truncated length extension");
        b = in[i++];
        len += b;
      } while (b == 255);
    }
    if (dist > o || o + len > cap) throw Error("lzss: corrupt match");
    const std::uint8_t* m = out + o - dist;
    if (dist >= 8) {
      std::size_t k = 0;
      for (; k + 8 <= len; k += 8) std::memcpy(out + o + k, m + k, 8);
      for (; k < len; ++k) out[o + k] = m[k];
    } else {
      for (std::size_t k = 0; k < len; ++k) out[o + k] = m[k];
    }
    o += len;
  }
  if (i != in_len) throw Error("lzss: trailing bytes after stream end");
}

}  // namespace tiersim::lzss
