#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "idealgraph/arithmetic.hpp"

using namespace idealgraph;

TEST_SUITE_BEGIN("arithmetic");

TEST_CASE("factorize canonical results") {
  auto f = factorize(12);
  CHECK(f.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(f.exponents == std::vector<std::uint32_t>{2, 1});
  CHECK(f.value() == 12);

  f = factorize(7);
  CHECK(f.primes == std::vector<std::uint64_t>{7});
  CHECK(f.exponents == std::vector<std::uint32_t>{1});

  f = factorize(360);
  CHECK(f.primes == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(f.exponents == std::vector<std::uint32_t>{3, 2, 1});
  CHECK(f.value() == 360);
}

TEST_CASE("factorize rejects bad input") {
  CHECK_THROWS_AS(factorize(0), std::domain_error);
  CHECK_THROWS_AS(factorize(1), std::domain_error);
  CHECK_THROWS_AS(factorize(kDefaultMaxModulus + 1), std::domain_error);
  CHECK_NOTHROW(factorize(999'999'937));  // large prime below the cap
}

TEST_CASE("factorize reconstructs every m up to 10000") {
  for (std::uint64_t m = 2; m <= 10'000; ++m) {
    const auto f = factorize(m);
    CHECK(f.value() == m);
    CHECK(std::is_sorted(f.primes.begin(), f.primes.end()));
    for (std::uint32_t e : f.exponents) CHECK(e >= 1);
  }
}

TEST_CASE("make_module_pair reads off beta") {
  const auto p = make_module_pair(12, 3);
  CHECK(p.alpha() == std::vector<std::uint32_t>{2, 1});
  CHECK(p.beta == std::vector<std::uint32_t>{0, 1});
  CHECK(p.module_support() == std::vector<std::size_t>{1});
  CHECK(p.module_support_size() == 1);

  const auto q = make_module_pair(12, 12);
  CHECK(q.beta == q.alpha());
  CHECK(q.module_support_size() == 2);
  CHECK(q.module_is_radical() == false);

  CHECK(make_module_pair(30, 30).module_is_radical());
}

TEST_CASE("make_module_pair rejections") {
  CHECK_THROWS_WITH_AS(make_module_pair(12, 5), doctest::Contains("not a module"),
                       std::domain_error);
  CHECK_THROWS_AS(make_module_pair(12, 1), std::domain_error);
  CHECK_THROWS_AS(make_module_pair(1, 1), std::domain_error);
  CHECK_THROWS_AS(make_module_pair(0, 0), std::domain_error);
}

TEST_CASE("enumerate_divisors is lexicographic") {
  const auto pair = make_module_pair(12, 12);
  const auto divisors = enumerate_divisors(pair);
  std::vector<std::uint64_t> values;
  for (const auto& d : divisors) values.push_back(divisor_value(pair, d));
  CHECK(values == std::vector<std::uint64_t>{1, 3, 2, 6, 4, 12});

  CHECK(enumerate_divisors(make_module_pair(8, 2)).size() == 4);
  CHECK(enumerate_divisors(make_module_pair(6, 2)).size() == 4);
}

TEST_CASE("lcm_vector componentwise max") {
  const DivisorVector two{{1, 0}};
  const DivisorVector three{{0, 1}};
  const DivisorVector four{{2, 0}};
  CHECK(lcm_vector(two, three) == DivisorVector{{1, 1}});
  CHECK(lcm_vector(two, four) == DivisorVector{{2, 0}});
  CHECK(lcm_vector(four, four) == four);
  CHECK_THROWS_AS(lcm_vector(two, DivisorVector{{1, 0, 0}}), std::domain_error);
}

TEST_CASE("n_divides examples") {
  const auto p12_3 = make_module_pair(12, 3);
  CHECK(n_divides(p12_3, DivisorVector{{1, 1}}));        // 6
  CHECK_FALSE(n_divides(p12_3, DivisorVector{{2, 0}}));  // 4
  const auto p12_12 = make_module_pair(12, 12);
  CHECK_FALSE(n_divides(p12_12, DivisorVector{{1, 1}}));
}

TEST_CASE("d_support examples") {
  const auto p12_12 = make_module_pair(12, 12);
  CHECK(d_support(p12_12, DivisorVector{{1, 0}}) == std::vector<std::size_t>{0, 1});
  const auto p12_4 = make_module_pair(12, 4);
  CHECK(d_support(p12_4, DivisorVector{{1, 0}}) == std::vector<std::size_t>{0});
  const auto p12_3 = make_module_pair(12, 3);
  CHECK(d_support(p12_3, DivisorVector{{1, 1}}).empty());
}

TEST_CASE("lcm_vector is idempotent, commutative and associative") {
  for (std::uint64_t m = 2; m <= 200; ++m) {
    const auto pair = make_module_pair(m, m);
    const auto divisors = enumerate_divisors(pair);
    for (const auto& a : divisors) {
      CHECK(divisor_value(pair, lcm_vector(a, a)) == divisor_value(pair, a));
      for (const auto& b : divisors) {
        CHECK(lcm_vector(a, b) == lcm_vector(b, a));
        for (const auto& c : divisors) {
          CHECK(lcm_vector(lcm_vector(a, b), c) == lcm_vector(a, lcm_vector(b, c)));
        }
      }
    }
  }
}

TEST_CASE("n_divides agrees with integer divisibility, divisor counts exact") {
  for (std::uint64_t m = 2; m <= 2000; ++m) {
    const auto base = make_module_pair(m, m);
    const auto divisors = enumerate_divisors(base);

    std::uint64_t expected = 1;
    for (std::uint32_t a : base.alpha()) expected *= a + 1;
    REQUIRE(divisors.size() == expected);

    for (const auto& nd : divisors) {
      const std::uint64_t n = divisor_value(base, nd);
      if (n <= 1) continue;
      const auto pair = make_module_pair(m, n);
      const auto support = pair.module_support();
      for (const auto& d : divisors) {
        const std::uint64_t value = divisor_value(pair, d);
        CHECK(n_divides(pair, d) == (value % n == 0));
        for (std::size_t i : d_support(pair, d)) {
          CHECK(std::find(support.begin(), support.end(), i) != support.end());
        }
      }
    }
  }
}

TEST_SUITE_END();
