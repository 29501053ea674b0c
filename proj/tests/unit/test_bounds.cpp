#include <doctest.h>

#include <cmath>

#include "compdnf/bounds.hpp"
#include "compdnf/complete.hpp"
#include "compdnf/oracle.hpp"
#include "compdnf/skeleton.hpp"

using namespace compdnf;

TEST_SUITE("bounds") {

TEST_CASE("lower rank") {
  CHECK(lower_rank(7) == doctest::Approx(21.0 * (1.0 - std::exp(-std::log2(7.0) / 36.0))));
  CHECK(lower_rank(7) == doctest::Approx(1.5754).epsilon(1e-4));
  CHECK(lower_rank(2) > 0.0);
  const double a = lower_rank(std::ldexp(1.0, 10)) / std::ldexp(1.0, 10);
  const double b = lower_rank(std::ldexp(1.0, 20)) / std::ldexp(1.0, 20);
  const double c = lower_rank(std::ldexp(1.0, 30)) / std::ldexp(1.0, 30);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < 3.0);
  CHECK_THROWS_AS(lower_rank(1), Error);
}

TEST_CASE("upper rank") {
  CHECK(upper_rank(2047) == doctest::Approx(86481.4242057996).epsilon(1e-12));
  for (double n = 2; n <= std::ldexp(1.0, 24); n *= 1.7) {
    CHECK(upper_rank(n) > 3.0 * n);
    CHECK(upper_rank(n) > lower_rank(n));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(8, 2) == 28);
  CHECK(binomial(8, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK(binomial(62, 31) == 465428353255261088LL);
  CHECK_THROWS_AS(binomial(70, 35), Error);
}

TEST_CASE("formula5 for k = 8, lambda = 2 term by term") {
  const std::int64_t low = 1 + 8 + 28;
  const std::int64_t high = 256 - low;
  const std::int64_t expect = 2 * 9 * low - (64 + 24) + 3 * high + 3 * (70 - 28);
  CHECK(expect == 1361);
  CHECK(formula5_rank(8, 2) == expect);
  CHECK_THROWS_AS(formula5_rank(8, 1), Error);
  CHECK_THROWS_AS(formula5_rank(8, 4), Error);
  CHECK_NOTHROW(formula5_rank(8, 3));
}

TEST_CASE("formula5 stays under its relaxation up to k = 18") {
  for (std::size_t k = 4; k <= 18; ++k) {
    for (std::size_t lambda = k / 4; 2 * lambda < k; ++lambda) {
      CAPTURE(k);
      CAPTURE(lambda);
      CHECK(static_cast<double>(formula5_rank(k, lambda)) < formula5_relaxation(k, lambda));
    }
  }
  // the high-weight sum runs over the whole cube, about 6n, against 3n
  CHECK(static_cast<double>(formula5_rank(19, 4)) > formula5_relaxation(19, 4));
}

TEST_CASE("entropy") {
  CHECK(entropy(0.5) == doctest::Approx(1.0));
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(0.25) == doctest::Approx(0.8112781244591328));
}

TEST_CASE("other bounds") {
  const auto b = other_bounds(31, 6);
  CHECK(b.length_lower == 31);
  CHECK(b.dyakonov_length == 2 * 31 + 3);
  CHECK(b.m_set_threshold == doctest::Approx(2.0));
  CHECK(other_bounds(7, 4).length_lower == 7);
}

TEST_CASE("m set of G_k matches a binomial census") {
  for (std::size_t k = 3; k <= 12; ++k) {
    std::int64_t expect = 0;
    for (std::size_t w = 1; 2 * w <= k; ++w) {
      if (3 * w <= k) continue;
      expect += 2 * w == k ? binomial(k, w) / 2 : binomial(k, w);
    }
    CAPTURE(k);
    CHECK(static_cast<std::int64_t>(m_set(make_G(k)).size()) == expect);
  }
  CHECK(m_set_term_bound(7) == 1);
  CHECK(m_set_term_bound(2047) == 539);
}

TEST_CASE("conformance") {
  const auto g8 = make_G(8);
  const auto s = synthesize(g8);
  const auto r = conformance(s.dnf, g8, s.stats.lambda, s.stats.chains);
  CHECK(r.complete);
  CHECK(r.conforms());
  REQUIRE(r.formula5_rank.has_value());
  CHECK(*r.formula5_rank == formula5_rank(8, 2));
  CHECK(r.rank_below_upper.value());
  CHECK(r.length_above_lower.value());
  CHECK(r.dyakonov_length == 2 * 127 + 12);

  const auto f4 = make_F(4);
  const auto minimal = minimal_dnf(f4, Measure::rank);
  const auto rm = conformance(minimal, f4, 1);
  CHECK(rm.rank_above_lower.value());
  CHECK(static_cast<double>(minimal.rank()) >= lower_rank(7));

  Dnf broken;
  for (std::size_t i = 1; i < s.dnf.length(); ++i) broken.add(Term(s.dnf[i]));
  CHECK_THROWS_AS(conformance(broken, g8, 2), Error);
}

TEST_CASE("conformance flags are unset off the complete class") {
  const auto m = ZeroMatrix::from_strings({"01", "10"});
  const Dnf d{Term{pos(1), pos(2)}, Term{neg(1), neg(2)}};
  const auto r = conformance(d, m, 1);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.rank_above_lower.has_value());
  CHECK(r.conforms());
}

}  // TEST_SUITE
