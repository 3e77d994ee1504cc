#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "tiersim/codec.hpp"
#include "tiersim/datagen.hpp"

using namespace tiersim;

namespace {

double deflate_ratio(const std::vector<Bytes>& pages) {
  const Codec de{CodecKind::deflate, 6};
  std::size_t in = 0, out = 0;
  for (const auto& p : pages) {
    in += p.size();
    out += compress_page(de, p).size();
  }
  return static_cast<double>(in) / static_cast<double>(out);
}

}  // namespace

TEST_CASE("zeros profile yields identical all-zero pages", "[datagen]") {
  auto pages = generate_pages({DataKind::zeros, 42.0, 5}, 4);
  REQUIRE(pages.size() == 4);
  const Bytes zero(kPageSize, 0);
  for (const auto& p : pages) REQUIRE(p == zero);
}

TEST_CASE("random profile is incompressible", "[datagen]") {
  auto pages = generate_pages({DataKind::random_bytes, 1.0, 5}, 100);
  const double r = deflate_ratio(pages);
  CAPTURE(r);
  REQUIRE(r == Catch::Approx(1.0).margin(0.05));
}

TEST_CASE("generation is deterministic", "[datagen]") {
  const DataProfile prof{DataKind::mixed, 2.0, 90};
  auto a = generate_pages(prof, 32);
  auto b = generate_pages(prof, 32);
  REQUIRE(a == b);
}

TEST_CASE("page content is independent of requested count", "[datagen]") {
  const DataProfile prof{DataKind::text, 3.0, 1234};
  auto few = generate_pages(prof, 3);
  auto many = generate_pages(prof, 10);
  for (std::size_t i = 0; i < few.size(); ++i) REQUIRE(few[i] == many[i]);
  REQUIRE(generate_page(prof, 7) == many[7]);
}

TEST_CASE("text and mixed profiles hit the target ratio within 25%",
          "[datagen]") {
  for (const DataKind kind : {DataKind::text, DataKind::mixed}) {
    for (const double target : {2.0, 3.0}) {
      auto pages = generate_pages({kind, target, 999}, 400);
      const double r = deflate_ratio(pages);
      CAPTURE(to_string(kind), target, r);
      REQUIRE(r >= 0.75 * target);
      REQUIRE(r <= 1.25 * target);
    }
  }
}

TEST_CASE("target ratio below 1 is rejected", "[datagen]") {
  REQUIRE_THROWS_AS(generate_pages({DataKind::text, 0.5, 1}, 1), ConfigError);
  REQUIRE_THROWS_AS(generate_page({DataKind::zeros, 0.0, 1}, 0), ConfigError);
}

TEST_CASE("data profile ratio survey", "[.][bench]") {
  for (const double target : {1.5, 2.0, 2.5, 3.0, 4.0}) {
    auto t = generate_pages({DataKind::text, target, 31}, 300);
    auto m = generate_pages({DataKind::mixed, target, 31}, 300);
    std::printf("target=%.1f text=%.3f mixed=%.3f\n", target,
                deflate_ratio(t), deflate_ratio(m));
  }
}
