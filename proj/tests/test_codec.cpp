#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>

#include "tiersim/codec.hpp"
#include "tiersim/datagen.hpp"

using namespace tiersim;

namespace {

const std::vector<Codec> kAllCodecs = {
    {CodecKind::lz4, 0}, {CodecKind::lzo, 0}, {CodecKind::deflate, 0}};

double aggregate_ratio(const Codec& c, const std::vector<Bytes>& pages) {
  std::size_t in = 0, out = 0;
  for (const auto& p : pages) {
    in += p.size();
    out += compress_page(c, p).size();
  }
  return static_cast<double>(in) / static_cast<double>(out);
}

double mean_decompress_ns(const Codec& c, const std::vector<Bytes>& comp,
                          std::size_t original_size) {
  Bytes out(original_size);
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& blob : comp) decompress_bytes(c, blob, out);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::nano>(t1 - t0).count() /
         static_cast<double>(comp.size());
}

}  // namespace

TEST_CASE("round trip is identity for every codec", "[codecs]") {
  // 10,000 pages spanning structured and incompressible content.
  std::vector<DataProfile> profiles = {
      {DataKind::zeros, 2.0, 7},    {DataKind::text, 3.0, 7},
      {DataKind::text, 2.0, 9},     {DataKind::random_bytes, 1.0, 7},
      {DataKind::mixed, 2.0, 11},
  };
  std::size_t checked = 0;
  for (const auto& prof : profiles) {
    auto pages = generate_pages(prof, 667);
    for (const auto& codec : kAllCodecs) {
      for (const auto& page : pages) {
        const Bytes comp = compress_page(codec, page);
        REQUIRE(!comp.empty());
        const Bytes back = decompress_page(codec, comp);
        if (back != page) {  // avoid 10k expensive REQUIRE expansions
          REQUIRE(back == page);
        }
        ++checked;
      }
    }
  }
  REQUIRE(checked >= 10000);
}

TEST_CASE("round trip survives arbitrary-length buffers", "[codecs]") {
  auto rng = make_engine(123);
  for (std::size_t len : {0ul, 1ul, 2ul, 12ul, 13ul, 64ul, 100ul, 5000ul}) {
    Bytes buf(len);
    for (auto& b : buf) b = static_cast<std::uint8_t>(rng() % 7 * 31);
    for (const auto& codec : kAllCodecs) {
      const Bytes comp = compress_bytes(codec, buf);
      Bytes back(len);
      decompress_bytes(codec, comp, back);
      REQUIRE(back == buf);
    }
  }
}

TEST_CASE("compression is deterministic per (codec, page)", "[codecs]") {
  const auto page = generate_page({DataKind::text, 3.0, 21}, 5);
  for (const auto& codec : kAllCodecs) {
    REQUIRE(compress_page(codec, page) == compress_page(codec, page));
  }
}

TEST_CASE("zero page compresses hard under lz4", "[codecs]") {
  const Bytes zeros(kPageSize, 0);
  const auto comp = compress_page({CodecKind::lz4, 0}, zeros);
  REQUIRE(comp.size() < 2048);
  REQUIRE(static_cast<double>(kPageSize) / comp.size() >= 2.0);
}

TEST_CASE("deflate output is never larger than lz4 on text pages", "[codecs]") {
  auto pages = generate_pages({DataKind::text, 3.0, 33}, 64);
  for (const auto& page : pages) {
    const auto de = compress_page({CodecKind::deflate, 0}, page);
    const auto l4 = compress_page({CodecKind::lz4, 0}, page);
    REQUIRE(de.size() <= l4.size());
  }
}

TEST_CASE("compress_page rejects non-page-sized input", "[codecs]") {
  Bytes small(100, 1);
  REQUIRE_THROWS_AS(compress_page({CodecKind::lz4, 0}, small), Error);
}

TEST_CASE("decompress rejects corrupt streams", "[codecs]") {
  const auto page = generate_page({DataKind::text, 3.0, 2}, 0);
  for (const auto& codec : kAllCodecs) {
    Bytes comp = compress_page(codec, page);
    comp.resize(comp.size() / 2);  // truncate
    Bytes out(kPageSize);
    REQUIRE_THROWS_AS(decompress_bytes(codec, comp, out), Error);
  }
}

TEST_CASE("ratio ordering deflate >= lzo >= lz4 on compressible text",
          "[codecs]") {
  auto pages = generate_pages({DataKind::text, 3.0, 77}, 400);
  const double r_lz4 = aggregate_ratio({CodecKind::lz4, 0}, pages);
  const double r_lzo = aggregate_ratio({CodecKind::lzo, 0}, pages);
  const double r_def = aggregate_ratio({CodecKind::deflate, 0}, pages);
  CAPTURE(r_lz4, r_lzo, r_def);
  REQUIRE(r_def >= r_lzo);
  REQUIRE(r_lzo >= r_lz4);
}

TEST_CASE("decompress latency ordering lz4 <= lzo <= deflate", "[codecs]") {
  auto pages = generate_pages({DataKind::text, 3.0, 78}, 600);
  std::vector<double> lat;
  for (const auto& codec : kAllCodecs) {
    std::vector<Bytes> comp;
    comp.reserve(pages.size());
    for (const auto& p : pages) comp.push_back(compress_page(codec, p));
    mean_decompress_ns(codec, comp, kPageSize);  // warm
    lat.push_back(mean_decompress_ns(codec, comp, kPageSize));
  }
  CAPTURE(lat[0], lat[1], lat[2]);
  REQUIRE(lat[0] <= lat[1]);  // lz4 <= lzo
  REQUIRE(lat[1] <= lat[2]);  // lzo <= deflate
}

TEST_CASE("codec speed and ratio survey", "[.][bench]") {
  auto pages = generate_pages({DataKind::text, 3.0, 99}, 1000);
  for (const auto& codec : kAllCodecs) {
    std::vector<Bytes> comp;
    comp.reserve(pages.size());
    const auto c0 = std::chrono::steady_clock::now();
    for (const auto& p : pages) comp.push_back(compress_page(codec, p));
    const auto c1 = std::chrono::steady_clock::now();
    const double comp_ns =
        std::chrono::duration<double, std::nano>(c1 - c0).count() /
        pages.size();
    const double dec_ns = mean_decompress_ns(codec, comp, kPageSize);
    const double ratio = aggregate_ratio(codec, pages);
    std::printf("%-8s ratio=%.3f comp=%.0fns decomp=%.0fns\n",
                to_string(codec.kind), ratio, comp_ns, dec_ns);
  }
}
