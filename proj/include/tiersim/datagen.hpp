#pragma once

// Synthetic page corpus with controllable compressibility. The text profile
// interleaves dictionary words with incompressible runs; the noise fraction
// is solved from the requested deflate ratio, so generated data lands near
// the target without any external corpus.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <span>
#include <string_view>
#include <vector>

#include "tiersim/error.hpp"
#include "tiersim/rng.hpp"
#include "tiersim/types.hpp"

namespace tiersim {

enum class DataKind { zeros, text, random_bytes, mixed };

inline const char* to_string(DataKind k) {
  switch (k) {
    case DataKind::zeros: return "zeros";
    case DataKind::text: return "text";
    case DataKind::random_bytes: return "random";
    case DataKind::mixed: return "mixed";
  }
  return "?";
}

inline DataKind data_kind_from_string(std::string_view s) {
  if (s == "zeros") return DataKind::zeros;
  if (s == "text") return DataKind::text;
  if (s == "random") return DataKind::random_bytes;
  if (s == "mixed") return DataKind::mixed;
  throw ConfigError("unknown data kind '" + std::string(s) + "'");
}

struct DataProfile {
  DataKind kind = DataKind::text;
  double target_ratio = 3.0;  // approximate deflate ratio; ignored for
                              // zeros and random
  std::uint64_t seed = 1;
};

inline void validate(const DataProfile& p) {
  if (p.target_ratio < 1.0)
    throw ConfigError("data profile target_ratio must be >= 1");
}

namespace detail {

// Measured once against zlib level 6 and frozen; only coarse accuracy is
// needed since generate_pages promises the target within +-25%.
inline constexpr double kPureTextDeflateRatio = 5.0;
inline constexpr double kZerosDeflateRatio = 70.0;
inline constexpr double kMeanNoiseRun = 16.0;
inline constexpr double kMeanWordLen = 6.5;

inline const std::vector<std::string_view>& word_list() {
  static const std::vector<std::string_view> words = {
      "the",     "of",      "and",     "to",       "in",      "that",
      "server",  "memory",  "page",    "data",     "cache",   "load",
      "store",   "access",  "region",  "window",   "profile", "tier",
      "pool",    "object",  "latency", "cost",     "model",   "value",
      "count",   "table",   "index",   "entry",    "queue",   "batch",
      "stream",  "buffer",  "record",  "field",    "state",   "trace",
      "sample",  "event",   "fault",   "size",     "total",   "ratio",
      "system",  "kernel",  "daemon",  "policy",   "budget",  "saving",
      "compress", "expand", "migrate", "promote",  "demote",  "scan",
      "hot",     "cold",    "warm",    "fast",     "slow",    "dense",
  };
  return words;
}

// Fraction of page bytes that must be incompressible noise for the blended
// deflate ratio to come out near `target`.
inline double noise_fraction_for_ratio(double target, double pure_ratio) {
  if (target <= 1.0) return 1.0;
  if (target >= pure_ratio) return 0.0;
  return (1.0 / target - 1.0 / pure_ratio) / (1.0 - 1.0 / pure_ratio);
}

inline void fill_text_page(Bytes& page, std::mt19937_64& rng,
                           double target_ratio) {
  const double f = noise_fraction_for_ratio(target_ratio, kPureTextDeflateRatio);
  // Probability of picking a noise run such that the expected byte share
  // of noise equals f.
  const double q =
      (f * kMeanWordLen) / (f * kMeanWordLen + (1.0 - f) * kMeanNoiseRun);
  const auto& words = word_list();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> word_pick(0, words.size() - 1);
  std::uniform_int_distribution<int> run_len(8, 24);
  std::uniform_int_distribution<int> byte_pick(0, 255);

  std::size_t pos = 0;
  int since_break = 0;
  while (pos < kPageSize) {
    if (unit(rng) < q) {
      int len = run_len(rng);
      for (; len > 0 && pos < kPageSize; --len)
        page[pos++] = static_cast<std::uint8_t>(byte_pick(rng));
    } else {
      const auto w = words[word_pick(rng)];
      for (char ch : w) {
        if (pos >= kPageSize) break;
        page[pos++] = static_cast<std::uint8_t>(ch);
      }
      if (pos < kPageSize)
        page[pos++] = static_cast<std::uint8_t>(++since_break % 13 == 0 ? '\n' : ' ');
    }
  }
}

inline void fill_random_page(Bytes& page, std::mt19937_64& rng) {
  for (std::size_t i = 0; i + 8 <= kPageSize; i += 8) {
    const std::uint64_t v = rng();
    std::memcpy(page.data() + i, &v, 8);
  }
}

}  // namespace detail

// Deterministic per (profile, index): content never depends on how many
// pages were asked for, so callers may regenerate any page on demand.
inline Bytes generate_page(const DataProfile& profile, std::uint64_t index) {
  validate(profile);
  Bytes page(kPageSize, 0);
  DataKind kind = profile.kind;
  double target = profile.target_ratio;

  if (kind == DataKind::mixed) {
    // 20% zeros, 70% text, 10% random. The text share carries an adjusted
    // inner target so the blend lands near the requested ratio.
    const std::uint64_t h = mix_seed(profile.seed, 0x6d69786564ull, index);
    const auto bucket = h % 10;
    if (bucket < 2) {
      kind = DataKind::zeros;
    } else if (bucket < 9) {
      kind = DataKind::text;
      const double inv =
          (1.0 / profile.target_ratio - 0.2 / detail::kZerosDeflateRatio - 0.1) /
          0.7;
      target = inv <= 0 ? detail::kPureTextDeflateRatio
                        : std::clamp(1.0 / inv, 1.05,
                                     detail::kPureTextDeflateRatio);
    } else {
      kind = DataKind::random_bytes;
    }
  }

  switch (kind) {
    case DataKind::zeros:
      break;  // page already zero-filled
    case DataKind::text: {
      auto rng = make_engine(mix_seed(profile.seed, 0x74657874ull, index));
      detail::fill_text_page(page, rng, target);
      break;
    }
    case DataKind::random_bytes: {
      auto rng = make_engine(mix_seed(profile.seed, 0x72616e64ull, index));
      detail::fill_random_page(page, rng);
      break;
    }
    case DataKind::mixed:
      throw Error("unreachable data kind");
  }
  return page;
}

inline std::vector<Bytes> generate_pages(const DataProfile& profile,
                                         std::size_t count) {
  validate(profile);
  std::vector<Bytes> pages;
  pages.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pages.push_back(generate_page(profile, i));
  return pages;
}

}  // namespace tiersim
