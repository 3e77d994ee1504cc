#pragma once

// LZ4 block-format compressor/decompressor. Self-contained so the library
// carries no codec dependency beyond zlib; the greedy single-probe parse
// mirrors the reference fast path (4-byte hash, 64 KB offsets).

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <span>

#include "tiersim/error.hpp"
#include "tiersim/types.hpp"

namespace tiersim::lz4 {

inline constexpr std::size_t kMinMatch = 4;

inline std::size_t compress_bound(std::size_t n) { return n + n / 255 + 16; }

namespace detail {

inline std::uint32_t read32(const std::uint8_t* p) {
  std::uint32_t v;
  std::memcpy(&v, p, sizeof(v));
  return v;
}

inline std::uint32_t hash32(std::uint32_t v) {
  return (v * 2654435761u) >> 20;  // 12-bit table index
}

}  // namespace detail

inline Bytes compress(std::span<const std::uint8_t> src) {
  const std::size_t n = src.size();
  const std::uint8_t* base = src.data();
  Bytes out;
  out.reserve(compress_bound(n));

  auto emit_length = [&out](std::size_t v) {
    while (v >= 255) {
      out.push_back(255);
      v -= 255;
    }
    out.push_back(static_cast<std::uint8_t>(v));
  };
  // match_len == 0 marks the trailing literal-only sequence.
  auto emit_sequence = [&](std::size_t lit_start, std::size_t lit_len,
                           std::size_t offset, std::size_t match_len) {
    const std::size_t lit_code = lit_len < 15 ? lit_len : 15;
    const std::size_t ml = match_len == 0 ? 0 : match_len - kMinMatch;
    const std::size_t ml_code = match_len == 0 ? 0 : (ml < 15 ? ml : 15);
    out.push_back(static_cast<std::uint8_t>((lit_code << 4) | ml_code));
    if (lit_code == 15) emit_length(lit_len - 15);
    out.insert(out.end(), base + lit_start, base + lit_start + lit_len);
    if (match_len == 0) return;
    out.push_back(static_cast<std::uint8_t>(offset & 0xff));
    out.push_back(static_cast<std::uint8_t>(offset >> 8));
    if (ml_code == 15) emit_length(ml - 15);
  };

  if (n < 13) {  // too short for a conforming match
    emit_sequence(0, n, 0, 0);
    return out;
  }

  constexpr std::size_t kTableSize = 1u << 12;
  std::uint32_t table[kTableSize];
  std::fill(std::begin(table), std::end(table), 0xffffffffu);

  const std::size_t mflimit = n - 12;     // last match must start before here
  const std::size_t match_limit = n - 5;  // final 5 bytes stay literal
  std::size_t pos = 0;
  std::size_t anchor = 0;
  while (pos <= mflimit) {
    const std::uint32_t h = detail::hash32(detail::read32(base + pos));
    const std::uint32_t cand = table[h];
    table[h] = static_cast<std::uint32_t>(pos);
    if (cand != 0xffffffffu && pos - cand <= 0xffff &&
        detail::read32(base + cand) == detail::read32(base + pos)) {
      std::size_t m = pos + kMinMatch;
      std::size_t c = cand + kMinMatch;
      while (m < match_limit && base[m] == base[c]) {
        ++m;
        ++c;
      }
      const std::size_t match_len = m - pos;
      emit_sequence(anchor, pos - anchor, pos - cand, match_len);
      pos += match_len;
      anchor = pos;
    } else {
      ++pos;
    }
  }
  emit_sequence(anchor, n - anchor, 0, 0);
  return out;
}

inline void decompress(std::span<const std::uint8_t> src,
                       std::span<std::uint8_t> dst) {
  const std::uint8_t* in = src.data();
  const std::size_t in_len = src.size();
  std::uint8_t* out = dst.data();
  const std::size_t out_cap = dst.size();
  std::size_t i = 0;
  std::size_t o = 0;

  auto read_ext = [&](std::size_t v) {
    std::uint8_t b;
    do {
      if (i >= in_len) throw Error("lz4: truncated length field");
      b = in[i++];
      v += b;
    } while (b == 255);
    return v;
  };

  if (in_len == 0) {
    if (out_cap != 0) throw Error("lz4: empty input for non-empty output");
    return;
  }
  for (;;) {
    if (i >= in_len) throw Error("lz4: truncated block");
    const std::uint8_t token = in[i++];
    std::size_t lit = token >> 4;
    if (lit == 15) lit = read_ext(lit);
    if (i + lit > in_len || o + lit > out_cap)
      throw Error("lz4: literal run overflows");
    std::memcpy(out + o, in + i, lit);
    i += lit;
    o += lit;
    if (i == in_len) break;  // trailing literal-only sequence
    if (i + 2 > in_len) throw Error("lz4: truncated offset");
    const std::size_t offset =
        in[i] | (static_cast<std::size_t>(in[i + 1]) << 8);
    i += 2;
    if (offset == 0 || offset > o) throw Error("lz4: bad match offset");
    std::size_t ml = token & 15;
    if (ml == 15) ml = read_ext(ml);
    ml += kMinMatch;
    if (o + ml > out_cap) throw Error("lz4: match overflows output");
    const std::uint8_t* m = out + o - offset;
    if (offset >= 8) {
      std::size_t k = 0;
      for (; k + 8 <= ml; k += 8) std::memcpy(out + o + k, m + k, 8);
      for (; k < ml; ++k) out[o + k] = m[k];
    } else {
      for (std::size_t k = 0; k < ml; ++k) out[o + k] = m[k];
    }
    o += ml;
  }
  if (o != out_cap) throw Error("lz4: output size mismatch");
}

}  // namespace tiersim::lz4
