#include <doctest.h>

#include <bit>

#include "compdnf/complete.hpp"
#include "compdnf/io.hpp"
#include "compdnf/transform.hpp"

using namespace compdnf;

TEST_SUITE("complete") {

TEST_CASE("F_4 and G_4 match the reference matrices") {
  CHECK(make_F(4) == parse_matrix(read_text(COMPDNF_TEST_DATA "/f4.txt")));
  CHECK(make_G(4) == parse_matrix(read_text(COMPDNF_TEST_DATA "/g4.txt")));
  CHECK(make_G(4).column(6) == 0b1000);
}

TEST_CASE("small complete functions") {
  const auto f3 = make_F(3);
  CHECK(f3.row(0).to_string() == "000");
  CHECK(f3.row(1).to_string() == "011");
  CHECK(f3.row(2).to_string() == "101");
  const auto f2 = make_F(2);
  CHECK(f2.n() == 1);
  CHECK(f2.column(0) == 0b01);
  CHECK(make_G(2).n() == 1);
  CHECK_THROWS_AS(make_F(1), Error);
  CHECK_THROWS_AS(make_G(25), Error);
}

TEST_CASE("G columns stay at or below half") {
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto g = make_G(k);
    std::size_t units = 0;
    for (auto c : g.columns()) {
      REQUIRE(2 * static_cast<std::size_t>(std::popcount(c)) <= k);
      units += std::popcount(c) == 1;
    }
    CHECK(units == (k == 2 ? 1 : k));
  }
}

TEST_CASE("is_complete") {
  CHECK(is_complete(make_F(4)));
  CHECK_FALSE(is_complete(parse_matrix(read_text(COMPDNF_TEST_DATA "/phi.txt"))));
  for (std::size_t k = 2; k <= 10; ++k) {
    CHECK(is_complete(make_F(k)));
    CHECK(is_complete(make_G(k)));
  }
}

TEST_CASE("F and G are related by complementing heavy columns") {
  for (std::size_t k = 2; k <= 10; ++k) {
    const auto f = make_F(k);
    auto t = SPTransform::identity(f.n());
    for (std::size_t j = 0; j < f.n(); ++j) {
      t.invert[j] = 2 * static_cast<std::size_t>(std::popcount(f.column(j))) > k;
    }
    CHECK(apply_sp(f, t) == make_G(k));
  }
}

TEST_CASE("sample_P") {
  const auto one = sample_P(1, 3, 5);
  CHECK(one.k() == 1);
  CHECK(one.n() == 3);
  CHECK_THROWS_AS(sample_P(9, 3, 0), Error);
  CHECK(sample_P(8, 3, 0).k() == 8);

  const auto a = sample_P(4, 64, 42);
  CHECK(a == sample_P(4, 64, 42));
  CHECK_FALSE(a == sample_P(4, 64, 42, 1));
  CHECK(a.row(0).to_string() == "0110111010110101010100110111010001000000101011100111101010111110");
  CHECK(a.row(3).to_string() == "1011101001110101011110000111101000111101000000010100100001011101");
}

TEST_CASE("sample_proper has no constant columns") {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto m = sample_proper(5, 40, 3, t);
    for (auto c : m.columns()) {
      CHECK(c != 0);
      CHECK(c != m.all_ones());
    }
  }
}

TEST_CASE("reduction rate") {
  const double r = reduction_rate(2, 4, 100, 9);
  CHECK(r >= 0.0);
  CHECK(r <= 1.0);
  CHECK(r == reduction_rate(2, 4, 100, 9));
  CHECK(reduction_rate(4, 6, 200, 1) == 0.0);
  CHECK_THROWS_AS(reduction_rate(4, 6, 0, 1), Error);

  const auto r32 = reduction_experiment(4, 32, 2000, 42);
  const auto r64 = reduction_experiment(4, 64, 2000, 42);
  const auto r128 = reduction_experiment(4, 128, 2000, 42);
  CHECK(r32.complete == 1906);
  CHECK(r64.complete == 1999);
  CHECK(r128.complete == 2000);

  const auto all = reduction_experiment(4, 64, 1000, 42, Population::all);
  CHECK(all.proper == 1);
  CHECK(all.complete == 1);
}

}  // TEST_SUITE
