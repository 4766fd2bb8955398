#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "turan/errors.hpp"
#include "turan/numbers.hpp"

using namespace turan;

TEST_CASE("is_prime small cases") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(561));  // Carmichael
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
  // Sieve built independently of both implementations.
  const std::uint64_t limit = 1000000;
  std::vector<bool> composite(limit + 1, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!composite[i]) {
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  std::size_t mismatches = 0;
  for (std::uint64_t m = 0; m <= limit; ++m) mismatches += is_prime(m) == composite[m];
  CHECK(mismatches == 0);
  for (std::uint64_t m : {999983ULL, 999979ULL, 1000003ULL, 1000001ULL}) {
    CHECK(is_prime(m) == oracle::trial_division_prime(m));
  }
}

TEST_CASE("is_prime on 64-bit inputs") {
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases 2..23
  CHECK_FALSE(is_prime(4294967291ULL * 4294967279ULL));
  CHECK(is_prime(4294967291ULL));
  for (std::uint64_t m = 1000000000000ULL; m < 1000000000000ULL + 2000; ++m) {
    CHECK(is_prime(m) == oracle::trial_division_prime(m));
  }
}

TEST_CASE("mul_mod does not overflow") {
  const std::uint64_t m = 18446744073709551557ULL;
  CHECK(mul_mod(m - 1, m - 1, m) == 1);
  CHECK(pow_mod(3, m - 1, m) == 1);
}

TEST_CASE("PrimeModulus rejects non-primes and 2") {
  CHECK_THROWS_AS(PrimeModulus(4), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(2), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(1), InvalidModulus);
  CHECK(PrimeModulus(3).value() == 3);
}

TEST_CASE("field arithmetic") {
  const PrimeModulus p(101);
  for (std::uint64_t a = 1; a < 101; ++a) {
    const FieldElement x(a, p);
    CHECK((x * x.inverse()).value() == 1);
    CHECK((x - x).value() == 0);
    CHECK((x + FieldElement(101 - a, p)).value() == 0);
  }
  CHECK_THROWS_AS(FieldElement(0, p).inverse(), DomainError);
}

TEST_CASE("element_of_order examples") {
  const PrimeModulus five(5);
  CHECK(element_of_order(five, 1).value() == 1);
  CHECK(element_of_order(five, 2).value() == 4);
  CHECK_THROWS_AS(element_of_order(five, 3), OrderUnavailable);
  CHECK_THROWS_AS(element_of_order(five, 0), OrderUnavailable);
}

TEST_CASE("element_of_order has exact order for every divisor") {
  for (std::uint64_t p = 3; p < 400; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    const PrimeModulus mod(p);
    for (std::uint64_t t = 1; t < p; ++t) {
      if ((p - 1) % t != 0) continue;
      const FieldElement g = element_of_order(mod, t);
      // Order by repeated multiplication.
      std::uint64_t order = 1;
      FieldElement x = g;
      while (x.value() != 1) {
        x = x * g;
        ++order;
      }
      CHECK(order == t);
      CHECK(multiplicative_order(g) == t);
    }
  }
}

TEST_CASE("prime_search examples") {
  CHECK(prime_search(1000000, 1) == 997);
  CHECK(prime_search(100, 1) == 7);
  CHECK_THROWS_AS(prime_search(4, 6), NoPrimeInWindow);
  CHECK(prime_search(10, 1) == 3);  // window [0.97, 3.16]
}

TEST_CASE("prime_search satisfies the window and congruence") {
  for (std::uint64_t t : {1, 2, 3, 4, 6, 10}) {
    for (std::uint64_t n = 50; n < 200000; n = n * 5 / 4 + 1) {
      std::uint64_t p = 0;
      try {
        p = prime_search(n, t);
      } catch (const NoPrimeInWindow&) {
        // No qualifying prime: confirm by scanning the window with the oracle.
        const double hi = std::sqrt(static_cast<double>(n * t));
        const double lo = hi - std::cbrt(static_cast<double>(n));
        for (std::uint64_t q = 3; static_cast<double>(q) <= hi; ++q) {
          if (static_cast<double>(q) >= lo) {
            CHECK_FALSE((oracle::trial_division_prime(q) && q % t == 1 % t));
          }
        }
        continue;
      }
      CHECK(oracle::trial_division_prime(p));
      CHECK(p % t == 1 % t);
      CHECK(p * p <= n * t);
      CHECK(static_cast<double>(p) >=
            std::sqrt(static_cast<double>(n * t)) - std::cbrt(static_cast<double>(n)));
      // Largest qualifying prime.
      for (std::uint64_t q = p + 1; q * q <= n * t; ++q) {
        CHECK_FALSE((oracle::trial_division_prime(q) && q % t == 1 % t));
      }
    }
  }
}
