#include <doctest.h>

#include <bit>
#include <unordered_map>

#include "compdnf/chains.hpp"
#include "compdnf/error.hpp"

using namespace compdnf;

namespace {

std::size_t ones(std::uint64_t p) { return static_cast<std::size_t>(std::popcount(p)); }

}  // namespace

TEST_SUITE("chains") {

TEST_CASE("tiny decompositions") {
  const auto c1 = hansel(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].points == std::vector<std::uint64_t>{0, 1});

  const auto c2 = hansel(2);
  REQUIRE(c2.size() == 2);
  CHECK(chain_census(c2) == std::map<std::size_t, std::size_t>{{1, 1}, {3, 1}});
  CHECK(c2[0].size() == 3);
  CHECK(c2[0].bottom() == 0);
  CHECK(c2[0].top() == 3);

  const auto c4 = hansel(4);
  CHECK(c4.size() == 6);
  CHECK(chain_census(c4) == std::map<std::size_t, std::size_t>{{1, 2}, {3, 3}, {5, 1}});
  CHECK(hansel_census(4) == chain_census(c4));
  CHECK_THROWS_AS(hansel(0), Error);
  CHECK_THROWS_AS(hansel(21), Error);
}

TEST_CASE("chains are saturated, symmetric and sorted") {
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto cs = hansel(k);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      if (i > 0) REQUIRE(cs[i - 1].bottom() < c.bottom());
      REQUIRE(ones(c.bottom()) + ones(c.top()) == k);
      for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        REQUIRE(c.points[j] < c.points[j + 1]);
        REQUIRE((c.points[j] & c.points[j + 1]) == c.points[j]);
        REQUIRE(ones(c.points[j] ^ c.points[j + 1]) == 1);
      }
    }
  }
}

TEST_CASE("additional vertex lies on a shorter chain") {
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto cs = hansel(k);
    std::unordered_map<std::uint64_t, std::size_t> length;
    for (const auto& c : cs) {
      for (auto p : c.points) length[p] = c.size();
    }
    for (const auto& c : cs) {
      for (std::size_t j = 0; j + 2 < c.size(); ++j) {
        const auto extra = c.points[j] | (c.points[j + 2] ^ c.points[j + 1]);
        REQUIRE(length.at(extra) < c.size());
      }
    }
  }
}

TEST_CASE("band chains") {
  CHECK(band_chains(5, 0, 5) == hansel(5));
  const auto mid = band_chains(4, 2, 2);
  CHECK(mid.size() == 6);
  for (const auto& c : mid) {
    CHECK(c.size() == 1);
    CHECK(ones(c.bottom()) == 2);
  }
  for (const auto& c : band_chains(9, 3, 5)) CHECK(c.size() <= 3);
  CHECK_THROWS_AS(band_chains(4, 3, 2), Error);
  CHECK_THROWS_AS(band_chains(4, 0, 5), Error);
}

TEST_CASE("chain points decode to bit vectors") {
  Chain c{4, {0b0011, 0b0111}};
  CHECK(c.point(0).to_string() == "0011");
  CHECK(c.point(1).to_string() == "0111");
}

}  // TEST_SUITE
