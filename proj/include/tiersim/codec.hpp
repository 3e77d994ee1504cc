#pragma once

// Page codecs used by the compressed tiers. Three implementations span the
// latency/ratio spectrum: lz4 (fast, modest ratio), a balanced LZSS standing
// in the lzo slot (no lzo implementation is linked; calibration tables note
// the substitution), and zlib deflate (slow, best ratio).
//
// Codecs are pure: no state survives a call, so any number of workers may
// compress or decompress concurrently.

#include <zlib.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "tiersim/error.hpp"
#include "tiersim/lz4.hpp"
#include "tiersim/lzss.hpp"
#include "tiersim/types.hpp"

namespace tiersim {

enum class CodecKind { lz4, lzo, deflate };

inline const char* to_string(CodecKind k) {
  switch (k) {
    case CodecKind::lz4: return "lz4";
    case CodecKind::lzo: return "lzo";
    case CodecKind::deflate: return "deflate";
  }
  return "?";
}

inline CodecKind codec_kind_from_string(std::string_view s) {
  if (s == "lz4") return CodecKind::lz4;
  if (s == "lzo") return CodecKind::lzo;
  if (s == "deflate") return CodecKind::deflate;
  throw ConfigError("unknown codec '" + std::string(s) + "'");
}

inline int default_codec_level(CodecKind k) {
  switch (k) {
    case CodecKind::lz4: return 1;  // no effort knob in the block parse
    case CodecKind::lzo: return 6;
    case CodecKind::deflate: return 6;
  }
  return 1;
}

struct Codec {
  CodecKind kind = CodecKind::lz4;
  int level = 0;  // 0 selects the codec default

  int effective_level() const {
    return level > 0 ? level : default_codec_level(kind);
  }
  friend bool operator==(const Codec& a, const Codec& b) {
    return a.kind == b.kind && a.effective_level() == b.effective_level();
  }
};

namespace detail {

inline Bytes zlib_compress(std::span<const std::uint8_t> src, int level) {
  uLongf cap = compressBound(static_cast<uLong>(src.size()));
  Bytes out(cap);
  const int rc = compress2(out.data(), &cap, src.data(),
                           static_cast<uLong>(src.size()),
                           std::clamp(level, 1, 9));
  if (rc != Z_OK) throw Error("deflate: compress2 failed");
  out.resize(cap);
  return out;
}

inline void zlib_decompress(std::span<const std::uint8_t> src,
                            std::span<std::uint8_t> dst) {
  uLongf dlen = static_cast<uLongf>(dst.size());
  const int rc = uncompress(dst.data(), &dlen, src.data(),
                            static_cast<uLong>(src.size()));
  if (rc != Z_OK || dlen != dst.size())
    throw Error("deflate: uncompress failed");
}

}  // namespace detail

// Arbitrary-length entry points (corpora, tests). Output is deterministic
// for a given (codec, input) pair.
inline Bytes compress_bytes(const Codec& c, std::span<const std::uint8_t> src) {
  switch (c.kind) {
    case CodecKind::lz4: return lz4::compress(src);
    case CodecKind::lzo: return lzss::compress(src, c.effective_level());
    case CodecKind::deflate:
      return detail::zlib_compress(src, c.effective_level());
  }
  throw Error("unreachable codec kind");
}

inline void decompress_bytes(const Codec& c, std::span<const std::uint8_t> src,
                             std::span<std::uint8_t> dst) {
  switch (c.kind) {
    case CodecKind::lz4: lz4::decompress(src, dst); return;
    case CodecKind::lzo: lzss::decompress(src, dst); return;
    case CodecKind::deflate: detail::zlib_decompress(src, dst); return;
  }
  throw Error("unreachable codec kind");
}

// 4 KB page front-ends. Incompressible pages may come back at or above
// kPageSize; the tier layer decides whether to store such objects raw.
inline Bytes compress_page(const Codec& c, std::span<const std::uint8_t> page) {
  if (page.size() != kPageSize)
    throw Error("compress_page: page must be exactly 4096 bytes");
  return compress_bytes(c, page);
}

inline Bytes decompress_page(const Codec& c,
                             std::span<const std::uint8_t> compressed,
                             std::size_t original_size = kPageSize) {
  Bytes out(original_size);
  decompress_bytes(c, compressed, out);
  return out;
}

}  // namespace tiersim
